#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridgap {

/// Grid vertex: d coordinates, each in [N]. Coordinates are 1-based.
using GridPoint = std::vector<int>;

/// Domain value: d coordinates, each in [delta]. Coordinates are 1-based.
using DomainValue = std::vector<int>;

/// Orientation of the implicit binary constraints along grid edges.
/// Geq is the canonical form; Leq instances exist only as inputs to
/// leq_to_geq.
enum class BinaryRelation { Geq, Leq };

/// A d-dimensional geometric CSP: variables on the grid [N]^d, one unary
/// relation per variable over [delta]^d, and an implicit binary constraint
/// on every pair of variables adjacent along a grid axis. Binary
/// constraints are never stored; they are fully determined by the
/// variables and the relation orientation.
struct CspInstance {
    int d = 2;
    int N = 1;
    int delta = 1;
    BinaryRelation relation = BinaryRelation::Geq;
    std::vector<GridPoint> variables;
    std::vector<std::vector<DomainValue>> unary;  // unary[j] is R of variables[j]

    std::size_t num_variables() const { return variables.size(); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Report-style validation: dimension >= 2, variables inside the grid and
/// pairwise distinct, unary values inside [delta]^d with no duplicates
/// within one relation.
ValidationReport validate(const CspInstance& instance);

/// Throws std::invalid_argument with the first violation if invalid.
void require_valid(const CspInstance& instance);

/// One implicit binary constraint: variables[from] + e_axis == variables[to].
/// from/to index into instance.variables; axis is 1-based in [d].
struct GridEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int axis = 1;
};

/// All grid-adjacent variable pairs, each undirected edge exactly once,
/// oriented from the smaller axis coordinate to the larger. Ordered by
/// (from, axis) with variables taken in row-major order.
std::vector<GridEdge> constraint_edges(const CspInstance& instance);

/// Candidate solution: one domain value per variable, aligned with
/// instance.variables.
struct Assignment {
    std::vector<DomainValue> values;
};

/// True iff every unary constraint holds (f(a) in R_a) and every edge
/// constraint holds (f(a)[i] >= f(a')[i] for a' = a + e_i, or <= for a Leq
/// instance). Throws on structural mismatch between f and the instance.
bool is_satisfying(const CspInstance& instance, const Assignment& f);

/// Backtracking search over variables in row-major grid order with values
/// in lexicographic order, pruning on the edge constraint against
/// already-assigned neighbours. Deterministic: returns the first solution
/// in that order, or nullopt when unsatisfiable.
std::optional<Assignment> solve(const CspInstance& instance);

/// Reflects every unary value coordinatewise, y[i] = delta + 1 - x[i],
/// keeping the relation orientation. Applying it twice is the identity.
CspInstance reflect_unary(const CspInstance& instance);

/// Converts a Leq instance to the equivalent Geq instance by reflecting
/// all unary values. Satisfiability is preserved.
CspInstance leq_to_geq(const CspInstance& instance);

struct GeneratorConfig {
    int d = 2;
    int N = 2;
    int delta = 1;
    std::size_t num_vars = 1;
    double density = 1.0;
    std::uint64_t seed = 0;
    BinaryRelation relation = BinaryRelation::Geq;
};

/// Deterministic seeded instance generator. Variables form a connected
/// region of the grid grown from a random cell; each value of [delta]^d
/// enters each unary relation independently with probability `density`
/// (so relations may come out empty, making the instance unsatisfiable).
CspInstance random_instance(const GeneratorConfig& config);

}  // namespace gridgap
