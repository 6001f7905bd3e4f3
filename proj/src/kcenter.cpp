#include "gridgap/kcenter.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace gridgap {

namespace {

void check_k(const KCenterInstance& instance, int k, const char* who) {
    if (k < 1 || static_cast<std::size_t>(k) > instance.points.size()) {
        std::ostringstream out;
        out << who << ": k = " << k << " out of range [1, " << instance.points.size() << "]";
        throw std::invalid_argument(out.str());
    }
}

/// Pairwise squared distances compressed to small integer ranks so the
/// subset scan compares ints instead of big rationals. Rank order equals
/// value order.
struct RankTable {
    std::size_t n = 0;
    std::vector<int> rank;             // n*n, row-major
    std::vector<Rational> values;      // sorted ascending, values[rank] = dist_sq

    int at(std::size_t i, std::size_t j) const { return rank[i * n + j]; }
};

RankTable rank_distances(const KCenterInstance& instance) {
    RankTable table;
    table.n = instance.points.size();
    std::map<Rational, int> order;
    std::vector<Rational> flat(table.n * table.n);
    for (std::size_t i = 0; i < table.n; ++i) {
        for (std::size_t j = i; j < table.n; ++j) {
            Rational d = squared_distance(instance.points[i].position, instance.points[j].position);
            order.emplace(d, 0);
            flat[i * table.n + j] = d;
            flat[j * table.n + i] = std::move(d);
        }
    }
    table.values.reserve(order.size());
    for (auto& [value, idx] : order) {
        idx = static_cast<int>(table.values.size());
        table.values.push_back(value);
    }
    table.rank.resize(table.n * table.n);
    for (std::size_t i = 0; i < table.n * table.n; ++i) table.rank[i] = order.at(flat[i]);
    return table;
}

std::uint64_t checked_subset_count(std::size_t n, std::size_t k, std::uint64_t budget,
                                   const char* who) {
    const BigInt count = binomial(n, k);
    if (count > BigInt(budget)) {
        std::ostringstream out;
        out << who << ": C(" << n << "," << k << ") = " << count << " subsets exceed the budget of "
            << budget;
        throw BudgetExceeded(out.str());
    }
    return count.convert_to<std::uint64_t>();
}

template <typename Visit>
void scan_combinations(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    for (;;) {
        visit(comb);
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long long>(n - k + i);
        result /= static_cast<unsigned long long>(i);
    }
    return result;
}

RadiusSq covering_radius_sq(const KCenterInstance& instance, const CenterSet& q) {
    if (q.indices.empty()) throw std::invalid_argument("covering_radius_sq: empty center set");
    for (std::size_t idx : q.indices) {
        if (idx >= instance.points.size())
            throw std::invalid_argument("covering_radius_sq: center index out of range");
    }
    Rational worst = 0;
    for (const LabeledPoint& u : instance.points) {
        Rational best = squared_distance(u.position, instance.points[q.indices[0]].position);
        for (std::size_t t = 1; t < q.indices.size(); ++t) {
            Rational d = squared_distance(u.position, instance.points[q.indices[t]].position);
            if (d < best) best = std::move(d);
        }
        if (best > worst) worst = std::move(best);
    }
    return RadiusSq{std::move(worst)};
}

ExactSolveResult exact_solve(const KCenterInstance& instance, int k, std::uint64_t budget) {
    check_k(instance, k, "exact_solve");
    const std::size_t n = instance.points.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    checked_subset_count(n, kk, budget, "exact_solve");

    const RankTable table = rank_distances(instance);
    const int infinity = static_cast<int>(table.values.size());
    int best_rank = infinity;
    std::vector<std::size_t> best;

    scan_combinations(n, kk, [&](const std::vector<std::size_t>& comb) {
        int worst = 0;
        for (std::size_t u = 0; u < n; ++u) {
            int nearest = table.at(u, comb[0]);
            for (std::size_t t = 1; t < kk && nearest > 0; ++t)
                nearest = std::min(nearest, table.at(u, comb[t]));
            worst = std::max(worst, nearest);
            if (worst >= best_rank) return;  // lex-earlier optimum already found
        }
        best_rank = worst;
        best = comb;
    });

    return ExactSolveResult{CenterSet{std::move(best)}, RadiusSq{table.values[best_rank]}};
}

CenterSet farthest_first(const KCenterInstance& instance, int k, std::size_t start_index) {
    check_k(instance, k, "farthest_first");
    const std::size_t n = instance.points.size();
    if (start_index >= n) throw std::invalid_argument("farthest_first: start index out of range");

    std::vector<std::size_t> chosen{start_index};
    std::vector<Rational> nearest_sq(n);
    for (std::size_t u = 0; u < n; ++u)
        nearest_sq[u] =
            squared_distance(instance.points[u].position, instance.points[start_index].position);

    while (chosen.size() < static_cast<std::size_t>(k)) {
        std::size_t far = 0;
        for (std::size_t u = 1; u < n; ++u)
            if (nearest_sq[u] > nearest_sq[far]) far = u;
        chosen.push_back(far);
        for (std::size_t u = 0; u < n; ++u) {
            Rational d = squared_distance(instance.points[u].position, instance.points[far].position);
            if (d < nearest_sq[u]) nearest_sq[u] = std::move(d);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return CenterSet{std::move(chosen)};
}

std::string verdict_text(GapVerdict verdict) {
    switch (verdict) {
        case GapVerdict::Below2r: return "Below2r";
        case GapVerdict::AtLeast2rEps: return "AtLeast2rEps";
        case GapVerdict::Indeterminate: return "Indeterminate";
    }
    throw std::logic_error("verdict_text: unknown verdict");
}

GapDecision gap_decide(const KCenterInstance& instance, std::uint64_t budget) {
    ExactSolveResult solved = exact_solve(instance, instance.k, budget);
    GapDecision decision;
    decision.opt_sq = solved.radius_sq.value;
    decision.centers = std::move(solved.centers);
    if (decision.opt_sq < instance.params.two_r_sq())
        decision.verdict = GapVerdict::Below2r;
    else if (decision.opt_sq >= instance.params.gap_sq())
        decision.verdict = GapVerdict::AtLeast2rEps;
    else
        decision.verdict = GapVerdict::Indeterminate;
    return decision;
}

void for_each_subset_radius(
    const KCenterInstance& instance, int k, std::uint64_t budget,
    const std::function<void(const std::vector<std::size_t>&, const Rational&)>& visit) {
    check_k(instance, k, "for_each_subset_radius");
    const std::size_t n = instance.points.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    checked_subset_count(n, kk, budget, "for_each_subset_radius");

    const RankTable table = rank_distances(instance);
    scan_combinations(n, kk, [&](const std::vector<std::size_t>& comb) {
        int worst = 0;
        for (std::size_t u = 0; u < n; ++u) {
            int nearest = table.at(u, comb[0]);
            for (std::size_t t = 1; t < kk && nearest > 0; ++t)
                nearest = std::min(nearest, table.at(u, comb[t]));
            worst = std::max(worst, nearest);
        }
        visit(comb, table.values[worst]);
    });
}

}  // namespace gridgap
