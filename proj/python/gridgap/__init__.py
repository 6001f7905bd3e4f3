"""Exact gap reduction from grid CSPs to discrete Euclidean k-center.

All coordinates and radii cross the boundary as exact "p/q" strings;
feed them to fractions.Fraction when you need arithmetic.
"""

try:
    from gridgap._gridgap import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _gridgap import *  # noqa: F401,F403  (in-tree build)
