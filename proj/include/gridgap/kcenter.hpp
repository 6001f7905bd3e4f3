#pragma once

#include "gridgap/reduction.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridgap {

/// Candidate centers, held as sorted distinct point indices.
struct CenterSet {
    std::vector<std::size_t> indices;

    std::size_t size() const { return indices.size(); }
};

/// Squared covering radius; all optima travel squared to keep strict and
/// non-strict threshold comparisons exact.
struct RadiusSq {
    Rational value;
};

struct ExactSolveResult {
    CenterSet centers;
    RadiusSq radius_sq;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

BigInt binomial(std::size_t n, std::size_t k);

/// max over all points of the min squared distance to a center of Q.
RadiusSq covering_radius_sq(const KCenterInstance& instance, const CenterSet& q);

/// Brute-force optimum over all C(n,k) index subsets in lexicographic order;
/// the lexicographically first minimizer wins. Subset counts above the budget
/// abort with BudgetExceeded before any enumeration starts.
ExactSolveResult exact_solve(const KCenterInstance& instance, int k,
                             std::uint64_t budget = 10'000'000);

/// Farthest-first traversal from start_index; ties go to the smallest index.
/// Its radius is at most twice the optimum, i.e. radius_sq at most 4x.
CenterSet farthest_first(const KCenterInstance& instance, int k, std::size_t start_index = 0);

enum class GapVerdict { Below2r, AtLeast2rEps, Indeterminate };

std::string verdict_text(GapVerdict verdict);

struct GapDecision {
    GapVerdict verdict = GapVerdict::Indeterminate;
    Rational opt_sq;
    CenterSet centers;
};

/// Solves exactly with k = instance.k and places OPT^2 against (2r)^2 and
/// (2r(1+eps))^2. Instances coming out of build() never land in between, so
/// Indeterminate there means the construction itself is broken.
GapDecision gap_decide(const KCenterInstance& instance, std::uint64_t budget = 10'000'000);

/// Visits every size-k subset in lexicographic order with its exact squared
/// covering radius; throws BudgetExceeded when C(n,k) is above the budget.
void for_each_subset_radius(
    const KCenterInstance& instance, int k, std::uint64_t budget,
    const std::function<void(const std::vector<std::size_t>&, const Rational&)>& visit);

}  // namespace gridgap
