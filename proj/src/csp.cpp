#include "gridgap/csp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gridgap {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

bool in_box(const std::vector<int>& v, std::size_t d, int hi) {
    if (v.size() != d)
        return false;
    return std::all_of(v.begin(), v.end(), [&](int c) { return 1 <= c && c <= hi; });
}

}  // namespace

ValidationReport validate(const CspInstance& instance) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    if (instance.d < 2)
        fail("dimension must be >= 2");
    if (instance.N < 1)
        fail("grid side N must be >= 1");
    if (instance.delta < 1)
        fail("delta must be >= 1");
    if (instance.unary.size() != instance.variables.size())
        fail("unary relation count does not match variable count");
    if (instance.d < 2 || instance.N < 1 || instance.delta < 1)
        return report;

    const auto d = static_cast<std::size_t>(instance.d);
    std::set<GridPoint> seen;
    for (const auto& a : instance.variables) {
        if (!in_box(a, d, instance.N))
            fail("variable " + vec_str(a) + " outside grid [" + std::to_string(instance.N) + "]^d");
        if (!seen.insert(a).second)
            fail("duplicate variable " + vec_str(a));
    }
    for (std::size_t j = 0; j < instance.unary.size() && j < instance.variables.size(); ++j) {
        std::set<DomainValue> values;
        for (const auto& x : instance.unary[j]) {
            if (!in_box(x, d, instance.delta))
                fail("unary value " + vec_str(x) + " of variable " + vec_str(instance.variables[j]) +
                     " outside domain [" + std::to_string(instance.delta) + "]^d");
            if (!values.insert(x).second)
                fail("duplicate unary value " + vec_str(x) + " for variable " +
                     vec_str(instance.variables[j]));
        }
    }
    return report;
}

void require_valid(const CspInstance& instance) {
    const auto report = validate(instance);
    if (!report.ok())
        throw std::invalid_argument("invalid CSP instance: " + report.violations.front());
}

std::vector<GridEdge> constraint_edges(const CspInstance& instance) {
    // Row-major traversal keeps the edge list deterministic.
    std::vector<std::size_t> order(instance.variables.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return instance.variables[a] < instance.variables[b];
    });

    std::map<GridPoint, std::size_t> index;
    for (std::size_t j = 0; j < instance.variables.size(); ++j)
        index.emplace(instance.variables[j], j);

    std::vector<GridEdge> edges;
    for (const std::size_t j : order) {
        const auto& a = instance.variables[j];
        for (int axis = 1; axis <= instance.d; ++axis) {
            GridPoint b = a;
            ++b[static_cast<std::size_t>(axis - 1)];
            if (const auto it = index.find(b); it != index.end())
                edges.push_back(GridEdge{j, it->second, axis});
        }
    }
    return edges;
}

bool is_satisfying(const CspInstance& instance, const Assignment& f) {
    if (f.values.size() != instance.variables.size())
        throw std::invalid_argument("assignment does not match the variable set");
    const auto d = static_cast<std::size_t>(instance.d);
    for (const auto& value : f.values)
        if (!in_box(value, d, instance.delta))
            throw std::invalid_argument("assignment value " + vec_str(value) + " outside domain");

    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const auto& relation = instance.unary[j];
        if (std::find(relation.begin(), relation.end(), f.values[j]) == relation.end())
            return false;
    }
    for (const auto& edge : constraint_edges(instance)) {
        const int lhs = f.values[edge.from][static_cast<std::size_t>(edge.axis - 1)];
        const int rhs = f.values[edge.to][static_cast<std::size_t>(edge.axis - 1)];
        const bool ok = instance.relation == BinaryRelation::Geq ? lhs >= rhs : lhs <= rhs;
        if (!ok)
            return false;
    }
    return true;
}

namespace {

struct NeighbourConstraint {
    std::size_t order_pos;  // earlier variable, position in search order
    std::size_t axis0;      // 0-based coordinate index
    bool forward;           // true: earlier + e_axis == current
};

}  // namespace

std::optional<Assignment> solve(const CspInstance& instance) {
    require_valid(instance);
    const std::size_t n = instance.variables.size();
    if (n == 0)
        return Assignment{};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return instance.variables[a] < instance.variables[b];
    });

    // Candidate values per variable, lexicographically sorted.
    std::vector<std::vector<DomainValue>> candidates(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        candidates[pos] = instance.unary[order[pos]];
        std::sort(candidates[pos].begin(), candidates[pos].end());
        if (candidates[pos].empty())
            return std::nullopt;
    }

    // Constraints from each variable to earlier ones in the search order.
    std::map<GridPoint, std::size_t> pos_of;
    for (std::size_t pos = 0; pos < n; ++pos)
        pos_of.emplace(instance.variables[order[pos]], pos);
    std::vector<std::vector<NeighbourConstraint>> earlier(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const auto& a = instance.variables[order[pos]];
        for (int axis = 1; axis <= instance.d; ++axis) {
            const auto i = static_cast<std::size_t>(axis - 1);
            for (const int dir : {-1, +1}) {
                GridPoint b = a;
                b[i] += dir;
                const auto it = pos_of.find(b);
                if (it == pos_of.end() || it->second >= pos)
                    continue;
                // dir > 0: b == a + e_axis, so the pair is (a, b).
                earlier[pos].push_back(NeighbourConstraint{it->second, i, dir < 0});
            }
        }
    }

    const bool geq = instance.relation == BinaryRelation::Geq;
    std::vector<std::size_t> choice(n, 0);
    std::size_t pos = 0;
    while (true) {
        if (choice[pos] == candidates[pos].size()) {
            if (pos == 0)
                return std::nullopt;
            choice[pos] = 0;
            --pos;
            ++choice[pos];
            continue;
        }
        const auto& value = candidates[pos][choice[pos]];
        bool feasible = true;
        for (const auto& c : earlier[pos]) {
            const auto& other = candidates[c.order_pos][choice[c.order_pos]];
            // forward: pair is (other, value); otherwise (value, other).
            const int lhs = c.forward ? other[c.axis0] : value[c.axis0];
            const int rhs = c.forward ? value[c.axis0] : other[c.axis0];
            if (geq ? lhs < rhs : lhs > rhs) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            ++choice[pos];
            continue;
        }
        if (pos + 1 == n)
            break;
        ++pos;
    }

    Assignment result;
    result.values.resize(n);
    for (std::size_t p = 0; p < n; ++p)
        result.values[order[p]] = candidates[p][choice[p]];
    return result;
}

CspInstance reflect_unary(const CspInstance& instance) {
    CspInstance out = instance;
    for (auto& relation : out.unary)
        for (auto& value : relation)
            for (auto& coord : value)
                coord = instance.delta + 1 - coord;
    return out;
}

CspInstance leq_to_geq(const CspInstance& instance) {
    if (instance.relation != BinaryRelation::Leq)
        throw std::invalid_argument("leq_to_geq: input instance is not a Leq instance");
    CspInstance out = reflect_unary(instance);
    out.relation = BinaryRelation::Geq;
    return out;
}

namespace {

// Drawing helpers pinned to the mt19937_64 bit stream so generated
// instances are identical across platforms (std distributions are not
// portable).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CspInstance random_instance(const GeneratorConfig& config) {
    if (config.d < 2)
        throw std::invalid_argument("random_instance: dimension must be >= 2");
    if (config.N < 1 || config.delta < 1)
        throw std::invalid_argument("random_instance: N and delta must be >= 1");
    if (config.density < 0.0 || config.density > 1.0)
        throw std::invalid_argument("random_instance: density must be in [0,1]");

    // Checked N^d, saturating well above any desk-scale request.
    std::uint64_t cells = 1;
    for (int i = 0; i < config.d; ++i) {
        if (cells > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(config.N)) {
            cells = std::uint64_t{1} << 62;
            break;
        }
        cells *= static_cast<std::uint64_t>(config.N);
    }
    if (config.num_vars < 1 || config.num_vars > cells)
        throw std::invalid_argument("random_instance: num_vars must be in [1, N^d]");

    std::mt19937_64 rng(config.seed);

    GridPoint start(static_cast<std::size_t>(config.d));
    for (auto& coord : start)
        coord = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(config.N)));

    // Grow a connected region: repeatedly annex a random frontier cell.
    std::set<GridPoint> region{start};
    std::vector<GridPoint> frontier;
    std::set<GridPoint> frontier_seen;
    auto extend_frontier = [&](const GridPoint& cell) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            for (const int dir : {-1, +1}) {
                GridPoint next = cell;
                next[i] += dir;
                if (next[i] < 1 || next[i] > config.N)
                    continue;
                if (region.count(next) || frontier_seen.count(next))
                    continue;
                frontier.push_back(next);
                frontier_seen.insert(next);
            }
        }
    };
    extend_frontier(start);
    while (region.size() < config.num_vars) {
        const auto pick = draw_below(rng, frontier.size());
        GridPoint cell = frontier[pick];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
        frontier_seen.erase(cell);
        region.insert(cell);
        extend_frontier(cell);
    }

    CspInstance instance;
    instance.d = config.d;
    instance.N = config.N;
    instance.delta = config.delta;
    instance.relation = config.relation;
    instance.variables.assign(region.begin(), region.end());

    // Domain values in lexicographic order; each joins with prob. density.
    std::vector<DomainValue> domain;
    DomainValue value(static_cast<std::size_t>(config.d), 1);
    while (true) {
        domain.push_back(value);
        std::size_t i = value.size();
        while (i > 0 && value[i - 1] == config.delta) {
            value[i - 1] = 1;
            --i;
        }
        if (i == 0)
            break;
        ++value[i - 1];
    }
    instance.unary.resize(instance.variables.size());
    for (auto& relation : instance.unary)
        for (const auto& x : domain)
            if (draw_unit(rng) < config.density)
                relation.push_back(x);

    return instance;
}

}  // namespace gridgap
