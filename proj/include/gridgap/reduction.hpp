#pragma once

#include "gridgap/csp.hpp"
#include "gridgap/geometry.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gridgap {

/// The two fixed quantities of the construction: r = 1/4 and
/// epsilon = r^2 / ((d-1) delta^2) = 1 / (16 (d-1) delta^2), so that
/// 0 < eps <= eps*delta <= eps*delta^2 <= (d-1)*eps*delta^2 = r^2 = 1/16.
struct ReductionParams {
    Rational r;
    Rational epsilon;
    int d = 2;
    int delta = 1;

    Rational r_sq() const { return r * r; }                       // core-core bound
    Rational two_r_sq() const { return (2 * r) * (2 * r); }       // completeness threshold
    Rational anchor_sq() const {                                  // (r(1+eps))^2
        const Rational v = r * (1 + epsilon);
        return v * v;
    }
    Rational gap_sq() const {                                     // (2r(1+eps))^2
        const Rational v = 2 * r * (1 + epsilon);
        return v * v;
    }
};

ReductionParams make_params(int d, int delta);

/// Border point B_a^{+i} / B_a^{-i}: axis is 1-based, sign is +1 or -1.
struct BorderLabel {
    GridPoint variable;
    int axis = 1;
    int sign = +1;
};

/// Core point C_a^x for a unary value x in R_a.
struct CoreLabel {
    GridPoint variable;
    DomainValue value;
};

/// Secondary point S^level on the segment between adjacent variables,
/// oriented so that to == from + e_axis; level is 1-based in [delta].
struct SecondaryLabel {
    GridPoint from;
    GridPoint to;
    int axis = 1;
    int level = 1;
};

using PointLabel = std::variant<BorderLabel, CoreLabel, SecondaryLabel>;

/// Canonical, injective text form: B(1,1)^{+2}, C(1,1)^{(2,1)},
/// S{(1,1),(2,1)}^{1}.
std::string label_text(const PointLabel& label);

struct LabeledPoint {
    PointLabel label;
    Point position;
};

/// A discrete k-Center instance over labeled points in Q^d. Instances
/// produced by build() additionally guarantee distinct coordinates, unique
/// labels and the exact point count; hand-assembled instances only need
/// consistent dimensions and unique labels.
struct KCenterInstance {
    int d = 2;
    int k = 1;
    ReductionParams params;
    std::vector<LabeledPoint> points;

    std::size_t size() const { return points.size(); }
};

/// Structural validation shared by build() and the JSON loader: label
/// uniqueness, dimension consistency, label well-formedness, k in range.
/// Coordinate distinctness is enforced only when require_distinct is set.
void validate_kcenter(const KCenterInstance& instance, bool require_distinct = false);

/// The 2d border points of a variable: B_a^{+i} at
/// a + e_i*r(1-eps) + (1^d - e_i)*2*eps*delta and B_a^{-i} mirrored.
std::vector<LabeledPoint> border_points(const GridPoint& a, const ReductionParams& params);

/// One core point a + eps*x per unary value x; empty relation gives none.
std::vector<LabeledPoint> core_points(const GridPoint& a,
                                      const std::vector<DomainValue>& relation,
                                      const ReductionParams& params);

/// The delta secondary points of an edge (a, a_next = a + e_i), the l-th at
/// a + e_i*((1-eps)*2r + eps*l).
std::vector<LabeledPoint> secondary_points(const GridPoint& a, const GridPoint& a_next,
                                           const ReductionParams& params);

/// Compiles a valid Geq instance into its k-Center point set: all border,
/// core and secondary points, k = |V|. Checks the exact count identity
/// n = |V|*2d + sum|R_a| + delta*|E| and that all coordinates are distinct.
KCenterInstance build(const CspInstance& instance);

}  // namespace gridgap
