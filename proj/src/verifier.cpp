#include "gridgap/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <utility>

namespace gridgap {

namespace {

std::string grid_str(const GridPoint& p) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ',';
        out << p[i];
    }
    out << ')';
    return out.str();
}

enum class Req { Lt, Ge, Eq };

bool holds(const Rational& dist_sq, Req req, const Rational& threshold_sq) {
    switch (req) {
        case Req::Lt: return dist_sq < threshold_sq;
        case Req::Ge: return dist_sq >= threshold_sq;
        case Req::Eq: return dist_sq == threshold_sq;
    }
    return false;
}

const char* req_symbol(Req req) {
    switch (req) {
        case Req::Lt: return "<";
        case Req::Ge: return ">=";
        case Req::Eq: return "==";
    }
    return "?";
}

/// Accumulates one named check; the first violated comparison becomes the
/// witness, later ones still count.
struct Recorder {
    CheckResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    void expect(const KCenterInstance& kc, std::size_t a, std::size_t b, Req req,
                const Rational& threshold_sq) {
        ++result.comparisons;
        if (!result.passed) return;
        Rational d = squared_distance(kc.points[a].position, kc.points[b].position);
        if (!holds(d, req, threshold_sq)) {
            result.passed = false;
            result.witness = Witness{label_text(kc.points[a].label), label_text(kc.points[b].label),
                                     std::move(d), threshold_sq, req_symbol(req)};
        }
    }

    void fail(Witness witness, std::string detail = "") {
        result.passed = false;
        if (!result.witness) result.witness = std::move(witness);
        if (result.detail.empty()) result.detail = std::move(detail);
    }

    CheckResult done() && {
        if (result.passed && result.detail.empty())
            result.detail = std::to_string(result.comparisons) + " comparisons";
        return std::move(result);
    }
};

using EdgeKey = std::pair<GridPoint, GridPoint>;

/// Label-derived index of an instance's points, used by every lemma scan.
struct Catalog {
    std::map<GridPoint, std::map<std::pair<int, int>, std::size_t>> borders;  // (axis,sign)
    std::map<GridPoint, std::map<DomainValue, std::size_t>> cores;
    std::map<EdgeKey, std::map<int, std::size_t>> secondaries;                // by level
};

Catalog catalog_points(const KCenterInstance& kc) {
    Catalog cat;
    for (std::size_t i = 0; i < kc.points.size(); ++i) {
        const PointLabel& label = kc.points[i].label;
        if (const auto* b = std::get_if<BorderLabel>(&label)) {
            cat.borders[b->variable][{b->axis, b->sign}] = i;
        } else if (const auto* c = std::get_if<CoreLabel>(&label)) {
            cat.cores[c->variable][c->value] = i;
        } else {
            const auto& s = std::get<SecondaryLabel>(label);
            cat.secondaries[{s.from, s.to}][s.level] = i;
        }
    }
    for (const auto& [variable, entries] : cat.borders) {
        if (entries.size() != 2 * static_cast<std::size_t>(kc.d))
            throw std::invalid_argument("verify_lemmas: incomplete border set for variable " +
                                        grid_str(variable));
    }
    for (const auto& [variable, values] : cat.cores) {
        if (!cat.borders.count(variable))
            throw std::invalid_argument("verify_lemmas: core without borders for variable " +
                                        grid_str(variable));
    }
    return cat;
}

/// The pair (u, q) realizing the covering radius: farthest point and its
/// nearest center.
std::pair<std::size_t, std::size_t> radius_witness(const KCenterInstance& kc, const CenterSet& q) {
    std::size_t worst_u = 0, worst_q = q.indices[0];
    Rational worst(-1);
    for (std::size_t u = 0; u < kc.points.size(); ++u) {
        std::size_t best_q = q.indices[0];
        Rational best = squared_distance(kc.points[u].position, kc.points[best_q].position);
        for (std::size_t t = 1; t < q.indices.size(); ++t) {
            Rational d =
                squared_distance(kc.points[u].position, kc.points[q.indices[t]].position);
            if (d < best) {
                best = std::move(d);
                best_q = q.indices[t];
            }
        }
        if (best > worst) {
            worst = std::move(best);
            worst_u = u;
            worst_q = best_q;
        }
    }
    return {worst_u, worst_q};
}

CheckResult threshold_check(const KCenterInstance& kc, std::string name, const CenterSet& centers,
                            const Rational& radius_sq, Req req, const Rational& threshold_sq,
                            std::string detail) {
    Recorder rec(std::move(name));
    ++rec.result.comparisons;
    rec.result.detail = std::move(detail);
    if (!holds(radius_sq, req, threshold_sq)) {
        auto [u, q] = radius_witness(kc, centers);
        rec.fail(Witness{label_text(kc.points[u].label), label_text(kc.points[q].label), radius_sq,
                         threshold_sq, req_symbol(req)});
    }
    return std::move(rec).done();
}

}  // namespace

CenterSet centers_from_assignment(const CspInstance& csp, const KCenterInstance& kc,
                                  const Assignment& f) {
    if (!is_satisfying(csp, f))
        throw std::invalid_argument(
            "centers_from_assignment: assignment does not satisfy the instance");
    std::map<GridPoint, std::map<DomainValue, std::size_t>> cores;
    for (std::size_t i = 0; i < kc.points.size(); ++i) {
        if (const auto* c = std::get_if<CoreLabel>(&kc.points[i].label))
            cores[c->variable][c->value] = i;
    }
    CenterSet q;
    q.indices.reserve(csp.variables.size());
    for (std::size_t vi = 0; vi < csp.variables.size(); ++vi) {
        std::size_t idx = kc.points.size();
        if (const auto var_it = cores.find(csp.variables[vi]); var_it != cores.end()) {
            if (const auto val_it = var_it->second.find(f.values[vi]);
                val_it != var_it->second.end())
                idx = val_it->second;
        }
        if (idx == kc.points.size())
            throw std::invalid_argument("centers_from_assignment: no core point for variable " +
                                        grid_str(csp.variables[vi]) + " with value " +
                                        grid_str(f.values[vi]));
        q.indices.push_back(idx);
    }
    std::sort(q.indices.begin(), q.indices.end());
    return q;
}

std::optional<Assignment> decode_assignment(const CspInstance& csp, const KCenterInstance& kc,
                                            const CenterSet& q) {
    if (q.indices.size() != csp.num_variables())
        throw std::invalid_argument("decode_assignment: center set size differs from |V|");
    std::map<GridPoint, std::size_t> var_index;
    for (std::size_t vi = 0; vi < csp.variables.size(); ++vi) var_index[csp.variables[vi]] = vi;

    std::vector<std::optional<DomainValue>> chosen(csp.variables.size());
    for (std::size_t idx : q.indices) {
        if (idx >= kc.points.size())
            throw std::invalid_argument("decode_assignment: center index out of range");
        const auto* c = std::get_if<CoreLabel>(&kc.points[idx].label);
        if (!c) return std::nullopt;  // border or secondary center
        const auto it = var_index.find(c->variable);
        if (it == var_index.end()) return std::nullopt;
        if (chosen[it->second]) return std::nullopt;  // two cores of one variable
        chosen[it->second] = c->value;
    }
    Assignment f;
    f.values.reserve(chosen.size());
    for (auto& value : chosen) {
        if (!value) return std::nullopt;
        f.values.push_back(std::move(*value));
    }
    return f;
}

VerificationReport verify_lemmas(const KCenterInstance& kc, const std::string& instance_id) {
    const auto started = std::chrono::steady_clock::now();
    validate_kcenter(kc);
    const Catalog cat = catalog_points(kc);

    const Rational r_sq = kc.params.r_sq();
    const Rational two_r_sq = kc.params.two_r_sq();
    const Rational gap_sq = kc.params.gap_sq();
    const Rational anchor_sq = kc.params.anchor_sq();

    VerificationReport report;
    report.instance_id = instance_id;

    {
        Recorder rec("border-gap");
        for (const auto& [variable, entries] : cat.borders)
            for (int axis = 1; axis <= kc.d; ++axis)
                rec.expect(kc, entries.at({axis, +1}), entries.at({axis, -1}), Req::Eq, gap_sq);
        report.checks.push_back(std::move(rec).done());
    }
    {
        Recorder rec("core-diam");
        for (const auto& [variable, values] : cat.cores) {
            for (auto it = values.begin(); it != values.end(); ++it)
                for (auto jt = std::next(it); jt != values.end(); ++jt)
                    rec.expect(kc, it->second, jt->second, Req::Lt, r_sq);
        }
        report.checks.push_back(std::move(rec).done());
    }
    {
        Recorder rec("core-border");
        for (const auto& [variable, values] : cat.cores) {
            const auto& borders = cat.borders.at(variable);
            for (const auto& [value, ci] : values)
                for (const auto& [key, bi] : borders) rec.expect(kc, ci, bi, Req::Lt, two_r_sq);
        }
        report.checks.push_back(std::move(rec).done());
    }
    {
        Recorder rec("anchor");
        for (const auto& [variable, entries] : cat.borders) {
            std::vector<Rational> coords(variable.begin(), variable.end());
            const Point anchor(std::move(coords));
            for (const auto& [key, bi] : entries) {
                ++rec.result.comparisons;
                if (!rec.result.passed) continue;
                Rational d = squared_distance(anchor, kc.points[bi].position);
                if (d != anchor_sq)
                    rec.fail(Witness{grid_str(variable), label_text(kc.points[bi].label),
                                     std::move(d), anchor_sq, "=="});
            }
        }
        report.checks.push_back(std::move(rec).done());
    }
    {
        // Near set of B_a^{+i}: D[a] plus the secondary runs of edges leaving
        // a along any axis; for B_a^{-i}, edges entering a. The runs of other
        // same-direction axes really do come closer than 2r(1+eps) when
        // (d-1)*delta is small: d=2, delta=1 puts S^1 of the axis-1 edge at
        // squared distance 901/4096 from B^{+2}, under (2r(1+eps))^2 =
        // 1156/4096. Only the aligned run can ever cover the border pair, so
        // the covering arguments downstream are unaffected.
        Recorder rec("isolation");
        for (const auto& [variable, entries] : cat.borders) {
            for (const auto& [key, bi] : entries) {
                const int sign = key.second;
                for (std::size_t w = 0; w < kc.points.size(); ++w) {
                    ++rec.result.comparisons;
                    if (!rec.result.passed) continue;
                    Rational d =
                        squared_distance(kc.points[w].position, kc.points[bi].position);
                    if (d >= gap_sq) continue;
                    bool allowed = false;
                    const PointLabel& wl = kc.points[w].label;
                    if (const auto* b = std::get_if<BorderLabel>(&wl))
                        allowed = b->variable == variable;
                    else if (const auto* c = std::get_if<CoreLabel>(&wl))
                        allowed = c->variable == variable;
                    else {
                        const auto& s = std::get<SecondaryLabel>(wl);
                        allowed = sign > 0 ? s.from == variable : s.to == variable;
                    }
                    if (!allowed)
                        rec.fail(Witness{label_text(wl), label_text(kc.points[bi].label),
                                         std::move(d), gap_sq, ">="},
                                 "point below the gap radius but outside the near set");
                }
            }
        }
        report.checks.push_back(std::move(rec).done());
    }
    {
        Recorder le_x("switch-le-x");
        Recorder gt_x("switch-gt-x");
        Recorder gt_y("switch-gt-y");
        Recorder le_y("switch-le-y");
        for (const auto& [edge, levels] : cat.secondaries) {
            const auto& [from, to] = edge;
            int axis = 0;
            for (int j = 0; j < kc.d; ++j)
                if (to[j] == from[j] + 1) axis = j + 1;
            for (const auto& [level, si] : levels) {
                if (const auto it = cat.cores.find(from); it != cat.cores.end()) {
                    for (const auto& [x, ci] : it->second) {
                        if (level <= x[axis - 1])
                            le_x.expect(kc, ci, si, Req::Lt, two_r_sq);
                        else
                            gt_x.expect(kc, ci, si, Req::Ge, gap_sq);
                    }
                }
                if (const auto it = cat.cores.find(to); it != cat.cores.end()) {
                    for (const auto& [y, ci] : it->second) {
                        if (level > y[axis - 1])
                            gt_y.expect(kc, ci, si, Req::Lt, two_r_sq);
                        else
                            le_y.expect(kc, ci, si, Req::Ge, gap_sq);
                    }
                }
            }
        }
        report.checks.push_back(std::move(le_x).done());
        report.checks.push_back(std::move(gt_x).done());
        report.checks.push_back(std::move(gt_y).done());
        report.checks.push_back(std::move(le_y).done());
    }
    {
        Recorder rec("far-core");
        for (const auto& [edge, levels] : cat.secondaries) {
            for (const auto& [variable, values] : cat.cores) {
                if (variable == edge.first || variable == edge.second) continue;
                for (const auto& [level, si] : levels)
                    for (const auto& [z, ci] : values) rec.expect(kc, ci, si, Req::Ge, gap_sq);
            }
        }
        report.checks.push_back(std::move(rec).done());
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

VerificationReport verify_gap(const CspInstance& csp, const GapCheckOptions& options,
                              const std::string& instance_id) {
    const auto started = std::chrono::steady_clock::now();
    require_valid(csp);
    const CspInstance geq = csp.relation == BinaryRelation::Leq ? leq_to_geq(csp) : csp;
    const KCenterInstance kc = build(geq);

    VerificationReport report;
    report.instance_id = instance_id;

    const Rational two_r_sq = kc.params.two_r_sq();
    const Rational gap_sq = kc.params.gap_sq();
    const std::optional<Assignment> sat = solve(geq);
    const ExactSolveResult opt = exact_solve(kc, kc.k, options.solver_budget);
    const std::string opt_detail = "OPT^2 = " + opt.radius_sq.value.str();

    if (sat) {
        const CenterSet f_set = centers_from_assignment(geq, kc, *sat);
        const RadiusSq f_radius = covering_radius_sq(kc, f_set);
        report.checks.push_back(threshold_check(kc, "completeness-assignment-radius", f_set,
                                                f_radius.value, Req::Lt, two_r_sq,
                                                "radius^2 = " + f_radius.value.str()));
        report.checks.push_back(threshold_check(kc, "completeness-optimum", opt.centers,
                                                opt.radius_sq.value, Req::Lt, two_r_sq,
                                                opt_detail));
        {
            Recorder rec("decode-optimum");
            ++rec.result.comparisons;
            const std::optional<Assignment> decoded = decode_assignment(geq, kc, opt.centers);
            if (!decoded || !is_satisfying(geq, *decoded)) {
                std::ostringstream labels;
                for (std::size_t idx : opt.centers.indices)
                    labels << ' ' << label_text(kc.points[idx].label);
                rec.fail(Witness{label_text(kc.points[opt.centers.indices[0]].label), "",
                                 opt.radius_sq.value, two_r_sq, "<"},
                         "optimal centers do not decode to a satisfying assignment:" +
                             labels.str());
            } else {
                rec.result.detail = "optimal centers decode to a satisfying assignment";
            }
            report.checks.push_back(std::move(rec).done());
        }
    } else {
        report.checks.push_back(threshold_check(kc, "soundness-optimum", opt.centers,
                                                opt.radius_sq.value, Req::Ge, gap_sq, opt_detail));
    }

    const BigInt subsets = binomial(kc.points.size(), static_cast<std::size_t>(kc.k));
    const bool enumerable = subsets <= BigInt(options.subset_budget);
    if (!enumerable && options.require_exhaustive) {
        std::ostringstream out;
        out << "verify_gap: C(" << kc.points.size() << "," << kc.k << ") = " << subsets
            << " subsets exceed the budget of " << options.subset_budget;
        throw BudgetExceeded(out.str());
    }
    if (enumerable) {
        Recorder all_q(sat ? "subset-scan" : "soundness-all-subsets");
        Recorder structure("subthreshold-structure");
        std::uint64_t total = 0, at_least = 0, below_gap = 0;
        for_each_subset_radius(
            kc, kc.k, options.subset_budget,
            [&](const std::vector<std::size_t>& indices, const Rational& radius_sq) {
                ++total;
                ++all_q.result.comparisons;
                if (radius_sq >= gap_sq) {
                    ++at_least;
                } else if (!sat) {
                    auto [u, q] = radius_witness(kc, CenterSet{indices});
                    all_q.fail(Witness{label_text(kc.points[u].label),
                                       label_text(kc.points[q].label), radius_sq, gap_sq, ">="});
                }
                if (radius_sq < gap_sq) {
                    // below the gap threshold only one shape is possible:
                    // exactly one core per variable and nothing else
                    ++below_gap;
                    ++structure.result.comparisons;
                    std::map<GridPoint, int> per_variable;
                    for (std::size_t idx : indices) {
                        const PointLabel& label = kc.points[idx].label;
                        if (const auto* c = std::get_if<CoreLabel>(&label)) {
                            ++per_variable[c->variable];
                        } else {
                            structure.fail(Witness{label_text(label), "", radius_sq, gap_sq, "<"},
                                           "non-core point in a subthreshold center set");
                            return;
                        }
                    }
                    for (const auto& [variable, count] : per_variable) {
                        if (count != 1) {
                            structure.fail(
                                Witness{grid_str(variable), "", radius_sq, gap_sq, "<"},
                                "variable covered by " + std::to_string(count) + " cores");
                            return;
                        }
                    }
                    if (per_variable.size() != static_cast<std::size_t>(kc.k))
                        structure.fail(Witness{"", "", radius_sq, gap_sq, "<"},
                                       "subthreshold center set misses a variable");
                }
            });
        if (!sat) {
            all_q.result.detail =
                std::to_string(at_least) + "/" + std::to_string(total) + " subsets >= threshold";
        } else {
            all_q.result.detail = std::to_string(total) + " subsets scanned, " +
                                  std::to_string(below_gap) + " below the gap threshold";
        }
        structure.result.detail =
            std::to_string(below_gap) + " subthreshold center sets, all one-core-per-variable";
        report.checks.push_back(std::move(all_q).done());
        report.checks.push_back(std::move(structure).done());
    }

    {
        Recorder rec("gap-agreement");
        ++rec.result.comparisons;
        GapVerdict verdict;
        if (opt.radius_sq.value < two_r_sq)
            verdict = GapVerdict::Below2r;
        else if (opt.radius_sq.value >= gap_sq)
            verdict = GapVerdict::AtLeast2rEps;
        else
            verdict = GapVerdict::Indeterminate;
        const GapVerdict expected = sat ? GapVerdict::Below2r : GapVerdict::AtLeast2rEps;
        rec.result.detail = "verdict = " + verdict_text(verdict) + ", csp = " +
                            (sat ? "satisfiable" : "unsatisfiable");
        if (verdict != expected) {
            auto [u, q] = radius_witness(kc, opt.centers);
            rec.fail(Witness{label_text(kc.points[u].label), label_text(kc.points[q].label),
                             opt.radius_sq.value, verdict == GapVerdict::Indeterminate ? gap_sq : two_r_sq,
                             sat ? "<" : ">="});
        }
        report.checks.push_back(std::move(rec).done());
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace gridgap
