#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library solvers: satisfiability is decided by enumerating
// the full product of unary relations, and center sets are scored by a
// direct max/min over squared distances.

#include "gridgap/csp.hpp"
#include "gridgap/rational.hpp"
#include "gridgap/reduction.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracles {

/// Size of the assignment space prod |R_a|, saturating at `cap`.
inline unsigned long long assignment_space(const gridgap::CspInstance& csp,
                                           unsigned long long cap) {
    unsigned long long total = 1;
    for (const auto& relation : csp.unary) {
        if (relation.empty()) return 0;
        if (total > cap / relation.size()) return cap + 1;
        total *= relation.size();
    }
    return total;
}

/// Checks one full assignment directly against every edge constraint.
inline bool assignment_ok(const gridgap::CspInstance& csp,
                          const std::vector<gridgap::GridEdge>& edges,
                          const std::vector<std::size_t>& choice) {
    for (const auto& edge : edges) {
        const int lhs = csp.unary[edge.from][choice[edge.from]][edge.axis - 1];
        const int rhs = csp.unary[edge.to][choice[edge.to]][edge.axis - 1];
        if (csp.relation == gridgap::BinaryRelation::Geq ? lhs < rhs : lhs > rhs)
            return false;
    }
    return true;
}

/// Exhaustive satisfiability check over all prod |R_a| assignments.
/// Throws std::runtime_error when that product exceeds `cap`.
inline bool brute_force_satisfiable(const gridgap::CspInstance& csp,
                                    unsigned long long cap = 1'000'000) {
    if (assignment_space(csp, cap) > cap)
        throw std::runtime_error("brute force: assignment space exceeds cap");
    for (const auto& relation : csp.unary)
        if (relation.empty()) return false;
    const auto edges = gridgap::constraint_edges(csp);
    std::vector<std::size_t> choice(csp.num_variables(), 0);
    while (true) {
        if (assignment_ok(csp, edges, choice)) return true;
        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < csp.unary[pos].size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) return false;
    }
}

/// Largest over points of the smallest squared distance to a center.
inline gridgap::Rational reference_radius_sq(const gridgap::KCenterInstance& kc,
                                             const std::vector<std::size_t>& centers) {
    std::optional<gridgap::Rational> worst;
    for (const auto& point : kc.points) {
        std::optional<gridgap::Rational> nearest;
        for (std::size_t c : centers) {
            gridgap::Rational sq = 0;
            for (std::size_t j = 0; j < point.position.coords.size(); ++j) {
                const gridgap::Rational diff =
                    point.position.coords[j] - kc.points[c].position.coords[j];
                sq = sq + diff * diff;
            }
            if (!nearest || sq < *nearest) nearest = sq;
        }
        if (!worst || *nearest > *worst) worst = *nearest;
    }
    return *worst;
}

}  // namespace oracles
