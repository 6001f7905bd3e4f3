#pragma once

#include "gridgap/csp.hpp"
#include "gridgap/kcenter.hpp"
#include "gridgap/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridgap {

/// Concrete evidence for a failed comparison: the offending pair, the exact
/// squared distance, and the squared threshold it had to satisfy.
struct Witness {
    std::string label_a;
    std::string label_b;
    Rational dist_sq;
    Rational threshold_sq;
    std::string relation;  // "<", ">=" or "==", the required relation that broke
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t comparisons = 0;
    std::string detail;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::string instance_id;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool ok() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// The center set {C_a^{f(a)} : a in V} selected by a satisfying assignment.
CenterSet centers_from_assignment(const CspInstance& csp, const KCenterInstance& kc,
                                  const Assignment& f);

/// Inverse direction: a center set consisting of exactly one core point per
/// variable maps back to the assignment reading off the core values; anything
/// else is not decodable.
std::optional<Assignment> decode_assignment(const CspInstance& csp, const KCenterInstance& kc,
                                            const CenterSet& q);

/// Exhaustive pairwise scan of the construction's distance lemmas:
///   border-gap   dist(B_a^{+i}, B_a^{-i})^2 == (2r(1+eps))^2
///   core-diam    cores of one variable closer than r
///   core-border  core to border of the same variable closer than 2r
///   anchor       dist(a, b)^2 == (r(1+eps))^2 for borders b of a
///   isolation    anything within 2r(1+eps) of B_a^{+i} lies in D[a] or
///                on a secondary run of an edge leaving a (entering a
///                for B_a^{-i}); runs of other axes in the same direction
///                can fall inside that radius, so all of them are near
///   switch-le-x / switch-gt-x / switch-gt-y / switch-le-y
///                the four core-versus-secondary cases
///   far-core     cores of uninvolved variables at >= 2r(1+eps) from
///                every secondary point
/// Works on any structurally labeled instance, so deliberately perturbed
/// coordinates are caught and reported with a witness pair.
VerificationReport verify_lemmas(const KCenterInstance& kc, const std::string& instance_id = "");

struct GapCheckOptions {
    std::uint64_t solver_budget = 10'000'000;   // exact_solve subsets
    std::uint64_t subset_budget = 1'000'000;    // all-Q soundness enumeration
    bool require_exhaustive = false;            // error instead of skipping all-Q
};

/// Machine-checks both directions of the reduction on one CSP instance:
/// satisfiable instances must come out with OPT^2 < (2r)^2 and a decodable
/// optimum, unsatisfiable ones with OPT^2 >= (2r(1+eps))^2 for the optimum
/// and (within the subset budget) for every size-k center set. Leq instances
/// are converted first; satisfiability is preserved by the reflection.
VerificationReport verify_gap(const CspInstance& csp, const GapCheckOptions& options = {},
                              const std::string& instance_id = "");

}  // namespace gridgap
