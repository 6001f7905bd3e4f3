// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Every threshold below is computed from the instance parameters; the only
// literals are the criteria's own bounds (corpus size, budgets, runtimes).

#include "gridgap/csp.hpp"
#include "gridgap/kcenter.hpp"
#include "gridgap/verifier.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using namespace gridgap;

namespace {

int failures = 0;

void report(int number, const std::string& slug, bool passed, double seconds,
            double limit_seconds, const std::string& detail) {
    const bool in_time = seconds < limit_seconds;
    if (!(passed && in_time)) ++failures;
    std::printf("criterion %d %-24s %s (%s, %.2f s)\n", number, (slug + ":").c_str(),
                passed ? (in_time ? "PASS" : "FAIL: over time budget") : "FAIL", detail.c_str(),
                seconds);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void criterion_1_parameter_identities() {
    Timer timer;
    bool ok = true;
    int pairs = 0;
    for (int d = 2; d <= 5; ++d) {
        for (int delta = 1; delta <= 5; ++delta) {
            const ReductionParams p = make_params(d, delta);
            ok = ok && p.epsilon == Rational(1, 16 * (d - 1) * delta * delta);
            ok = ok && (d - 1) * p.epsilon * delta * delta == Rational(1, 16);
            ok = ok && p.r == Rational(1, 4);
            ++pairs;
        }
    }
    report(1, "parameter-identities", ok && pairs == 20, timer.seconds(), 1.0,
           std::to_string(pairs) + " (d,delta) pairs, exact equality");
}

void criterion_2_lemma_suite() {
    Timer timer;
    const auto& entries = corpus::instances();
    std::set<std::pair<int, int>> span;
    bool ok = entries.size() >= 50;
    std::string first_fail;
    for (const auto& entry : entries) {
        span.insert({entry.csp.d, entry.csp.delta});
        const KCenterInstance kc = build(entry.csp);
        const VerificationReport r = verify_lemmas(kc, entry.id);
        if (!r.ok() && first_fail.empty()) first_fail = entry.id;
        ok = ok && r.ok();

        // the two equality lemmas, re-checked directly against the formulas
        for (const auto& point : kc.points) {
            const auto* border = std::get_if<BorderLabel>(&point.label);
            if (!border) continue;
            Point anchor;
            for (int c : border->variable) anchor.coords.push_back(Rational(c));
            ok = ok && squared_distance(anchor, point.position) == kc.params.anchor_sq();
            for (const auto& other : kc.points) {
                const auto* opposite = std::get_if<BorderLabel>(&other.label);
                if (!opposite || opposite->variable != border->variable ||
                    opposite->axis != border->axis || opposite->sign != -border->sign)
                    continue;
                ok = ok && squared_distance(point.position, other.position) == kc.params.gap_sq();
            }
        }
    }
    for (int d : {2, 3})
        for (int delta : {1, 2, 3}) ok = ok && span.count({d, delta}) > 0;
    report(2, "lemma-suite", ok, timer.seconds(), 30.0,
           std::to_string(entries.size()) + " instances, span " + std::to_string(span.size()) +
               " (d,delta) combinations" +
               (first_fail.empty() ? "" : ", first failure " + first_fail));
}

void criterion_3_completeness() {
    Timer timer;
    bool ok = true;
    int satisfiable = 0;
    for (const auto& entry : corpus::instances()) {
        const auto f = solve(entry.csp);
        if (!f) continue;
        ++satisfiable;
        const KCenterInstance kc = build(entry.csp);
        const Rational threshold = kc.params.two_r_sq();
        const CenterSet q = centers_from_assignment(entry.csp, kc, *f);
        ok = ok && covering_radius_sq(kc, q).value < threshold;
        ok = ok && exact_solve(kc, kc.k).radius_sq.value < threshold;
    }
    report(3, "completeness", ok && satisfiable > 0, timer.seconds(), 60.0,
           std::to_string(satisfiable) + " satisfiable instances below (2r)^2");
}

void criterion_4_soundness() {
    Timer timer;
    bool ok = true;
    int unsatisfiable = 0;
    std::uint64_t u1_subsets = 0;
    for (const auto& entry : corpus::instances()) {
        if (solve(entry.csp)) continue;
        ++unsatisfiable;
        const KCenterInstance kc = build(entry.csp);
        const Rational threshold = kc.params.gap_sq();
        if (binomial(kc.size(), kc.k) > BigInt(1'000'000)) continue;
        std::uint64_t total = 0;
        Rational smallest;
        bool first = true;
        for_each_subset_radius(kc, kc.k, 1'000'000,
                               [&](const std::vector<std::size_t>&, const Rational& radius) {
                                   ++total;
                                   if (first || radius < smallest) smallest = radius;
                                   first = false;
                               });
        ok = ok && smallest >= threshold;
        if (entry.id == "u1") {
            u1_subsets = total;
            ok = ok && threshold == Rational(65, 128) * Rational(65, 128);
        }
    }
    std::ostringstream detail;
    detail << unsatisfiable << " unsatisfiable instances, u1 over " << u1_subsets << " subsets";
    report(4, "soundness", ok && unsatisfiable > 0 && u1_subsets == 66, timer.seconds(), 60.0,
           detail.str());
}

void criterion_5_gap_integrity() {
    Timer timer;
    bool ok = true;
    int agreed = 0;
    const auto& entries = corpus::instances();
    for (const auto& entry : entries) {
        const GapDecision decision = gap_decide(build(entry.csp));
        ok = ok && decision.verdict != GapVerdict::Indeterminate;
        const bool satisfiable = solve(entry.csp).has_value();
        const GapVerdict expect = satisfiable ? GapVerdict::Below2r : GapVerdict::AtLeast2rEps;
        if (decision.verdict == expect) ++agreed;
    }
    ok = ok && agreed == static_cast<int>(entries.size());
    report(5, "gap-integrity", ok, timer.seconds(), 120.0,
           std::to_string(agreed) + "/" + std::to_string(entries.size()) +
               " verdicts agree, none indeterminate");
}

void criterion_6_decode_round_trip() {
    Timer timer;
    bool ok = true;
    int decoded = 0;
    for (const auto& entry : corpus::instances()) {
        const auto f = solve(entry.csp);
        if (!f) continue;
        const KCenterInstance kc = build(entry.csp);

        const auto back = decode_assignment(entry.csp, kc, centers_from_assignment(entry.csp, kc, *f));
        ok = ok && back.has_value() && back->values == f->values;

        const auto opt = decode_assignment(entry.csp, kc, exact_solve(kc, kc.k).centers);
        ok = ok && opt.has_value() && is_satisfying(entry.csp, *opt);
        ++decoded;
    }
    report(6, "decode-round-trip", ok && decoded > 0, timer.seconds(), 60.0,
           std::to_string(decoded) + " optima decoded to satisfying assignments");
}

void criterion_7_approximation() {
    Timer timer;
    bool ok = true;
    int checked = 0;
    for (const auto& entry : corpus::instances()) {
        const KCenterInstance kc = build(entry.csp);
        const Rational greedy = covering_radius_sq(kc, farthest_first(kc, kc.k)).value;
        const Rational exact = exact_solve(kc, kc.k).radius_sq.value;
        ok = ok && greedy <= 4 * exact;
        ++checked;
    }
    report(7, "approximation-factor", ok, timer.seconds(), 10.0,
           std::to_string(checked) + " instances within 4x in squared radius");
}

void criterion_8_transform() {
    Timer timer;
    const auto& entries = corpus::leq_instances();
    bool ok = entries.size() >= 20;
    for (const auto& entry : entries) {
        const bool before = oracles::brute_force_satisfiable(entry.csp);
        const bool after = oracles::brute_force_satisfiable(leq_to_geq(entry.csp));
        ok = ok && before == after;
    }
    report(8, "transform-correctness", ok, timer.seconds(), 60.0,
           std::to_string(entries.size()) + " <=-instances preserved satisfiability");
}

void criterion_9_mutation_sensitivity() {
    Timer timer;
    struct Mutation {
        const char* instance;
        const char* point;
        std::size_t coord;
        int direction;
    };
    // one border, core and secondary per worked instance; each shift lands
    // on the tight side of some check (a slack-side shift of epsilon/2 can
    // be absorbed, so directions are chosen, not scanned)
    const std::vector<Mutation> mutations = {
        {"s1", "B(1,1)^{+1}", 0, +1},        {"s1", "B(2,1)^{-2}", 1, -1},
        {"u1", "C(1,1)^{(1,1)}", 0, +1},     {"u1", "S{(1,1),(2,1)}^{2}", 0, +1},
        {"s1", "S{(1,1),(2,1)}^{1}", 0, +1},
    };
    int caught = 0;
    for (const auto& m : mutations) {
        KCenterInstance kc =
            build(m.instance == std::string("s1") ? corpus::s1() : corpus::u1());
        for (std::size_t i = 0; i < kc.size(); ++i) {
            if (label_text(kc.points[i].label) != m.point) continue;
            kc.points[i].position[m.coord] += m.direction * (kc.params.epsilon / 2);
        }
        const VerificationReport r = verify_lemmas(kc, "mutated");
        bool witnessed = false;
        for (const auto& c : r.checks)
            if (!c.passed && c.witness.has_value()) witnessed = true;
        if (!r.ok() && witnessed) ++caught;
    }
    const bool ok = mutations.size() >= 5 && caught == static_cast<int>(mutations.size());
    report(9, "mutation-sensitivity", ok, timer.seconds(), 30.0,
           std::to_string(caught) + "/" + std::to_string(mutations.size()) +
               " perturbations caught with a witness");
}

}  // namespace

int main() {
    criterion_1_parameter_identities();
    criterion_2_lemma_suite();
    criterion_3_completeness();
    criterion_4_soundness();
    criterion_5_gap_integrity();
    criterion_6_decode_round_trip();
    criterion_7_approximation();
    criterion_8_transform();
    criterion_9_mutation_sensitivity();
    if (failures == 0)
        std::printf("all 9 criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
