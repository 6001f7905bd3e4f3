#include "gridgap/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

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

std::vector<Rational> to_rational(const GridPoint& p) {
    std::vector<Rational> coords;
    coords.reserve(p.size());
    for (int c : p) coords.emplace_back(c);
    return coords;
}

}  // namespace

ReductionParams make_params(int d, int delta) {
    if (d < 2) throw std::invalid_argument("make_params: dimension must be >= 2");
    if (delta < 1) throw std::invalid_argument("make_params: delta must be >= 1");
    ReductionParams params;
    params.d = d;
    params.delta = delta;
    params.r = Rational(1, 4);
    params.epsilon = Rational(BigInt(1), BigInt(16) * (d - 1) * delta * delta);

    // The whole construction leans on this chain, so check it outright:
    // 0 < eps <= eps*delta <= eps*delta^2 <= (d-1)*eps*delta^2 = r^2.
    const Rational eps = params.epsilon;
    const Rational r_sq = params.r * params.r;
    if (!(Rational(0) < eps && eps <= eps * delta && eps * delta <= eps * delta * delta &&
          eps * delta * delta <= (d - 1) * eps * delta * delta &&
          (d - 1) * eps * delta * delta == r_sq)) {
        throw std::logic_error("make_params: parameter chain violated");
    }
    // eps also dominates 1/(16(d-1)|D|) where |D| = delta^d, the bound the
    // approximation-hardness step needs.
    BigInt domain_size = 1;
    for (int j = 0; j < d; ++j) domain_size *= delta;
    if (eps < Rational(BigInt(1), BigInt(16) * (d - 1) * domain_size))
        throw std::logic_error("make_params: epsilon below the domain-size bound");
    return params;
}

std::string label_text(const PointLabel& label) {
    std::ostringstream out;
    if (const auto* b = std::get_if<BorderLabel>(&label)) {
        out << 'B' << grid_str(b->variable) << "^{" << (b->sign > 0 ? '+' : '-') << b->axis << '}';
    } else if (const auto* c = std::get_if<CoreLabel>(&label)) {
        out << 'C' << grid_str(c->variable) << "^{" << grid_str(c->value) << '}';
    } else {
        const auto& s = std::get<SecondaryLabel>(label);
        out << 'S' << '{' << grid_str(s.from) << ',' << grid_str(s.to) << "}^{" << s.level << '}';
    }
    return out.str();
}

std::vector<LabeledPoint> border_points(const GridPoint& a, const ReductionParams& params) {
    const int d = params.d;
    if (static_cast<int>(a.size()) != d)
        throw std::invalid_argument("border_points: variable dimension mismatch");
    const Rational main_offset = params.r * (1 - params.epsilon);   // r(1-eps)
    const Rational side_offset = 2 * params.epsilon * params.delta; // 2*eps*delta

    std::vector<LabeledPoint> out;
    out.reserve(2 * static_cast<std::size_t>(d));
    for (int sign : {+1, -1}) {
        for (int axis = 1; axis <= d; ++axis) {
            std::vector<Rational> coords = to_rational(a);
            for (int j = 0; j < d; ++j)
                coords[j] += sign * (j == axis - 1 ? main_offset : side_offset);
            out.push_back({BorderLabel{a, axis, sign}, Point(std::move(coords))});
        }
    }
    return out;
}

std::vector<LabeledPoint> core_points(const GridPoint& a,
                                      const std::vector<DomainValue>& relation,
                                      const ReductionParams& params) {
    const int d = params.d;
    if (static_cast<int>(a.size()) != d)
        throw std::invalid_argument("core_points: variable dimension mismatch");

    std::vector<DomainValue> values = relation;
    std::sort(values.begin(), values.end());

    std::vector<LabeledPoint> out;
    out.reserve(values.size());
    for (const DomainValue& x : values) {
        if (static_cast<int>(x.size()) != d)
            throw std::invalid_argument("core_points: value dimension mismatch");
        std::vector<Rational> coords = to_rational(a);
        for (int j = 0; j < d; ++j) coords[j] += params.epsilon * x[j];
        out.push_back({CoreLabel{a, x}, Point(std::move(coords))});
    }
    return out;
}

std::vector<LabeledPoint> secondary_points(const GridPoint& a, const GridPoint& a_next,
                                           const ReductionParams& params) {
    const int d = params.d;
    if (static_cast<int>(a.size()) != d || static_cast<int>(a_next.size()) != d)
        throw std::invalid_argument("secondary_points: variable dimension mismatch");
    int axis = 0;
    for (int j = 0; j < d; ++j) {
        if (a[j] == a_next[j]) continue;
        if (a_next[j] == a[j] + 1 && axis == 0)
            axis = j + 1;
        else
            axis = -1;
        if (axis == -1) break;
    }
    if (axis <= 0)
        throw std::invalid_argument("secondary_points: variables are not axis successors");

    const Rational base = (1 - params.epsilon) * 2 * params.r;  // (1-eps)*2r
    std::vector<LabeledPoint> out;
    out.reserve(static_cast<std::size_t>(params.delta));
    for (int level = 1; level <= params.delta; ++level) {
        std::vector<Rational> coords = to_rational(a);
        coords[axis - 1] += base + params.epsilon * level;
        out.push_back({SecondaryLabel{a, a_next, axis, level}, Point(std::move(coords))});
    }
    return out;
}

void validate_kcenter(const KCenterInstance& instance, bool require_distinct) {
    if (instance.d < 2) throw std::invalid_argument("k-center instance: dimension must be >= 2");
    if (instance.k < 1) throw std::invalid_argument("k-center instance: k must be >= 1");
    if (instance.points.empty()) throw std::invalid_argument("k-center instance: no points");
    if (static_cast<std::size_t>(instance.k) > instance.points.size())
        throw std::invalid_argument("k-center instance: k exceeds point count");

    std::set<std::string> labels;
    for (const LabeledPoint& p : instance.points) {
        if (static_cast<int>(p.position.dimension()) != instance.d)
            throw std::invalid_argument("k-center instance: point dimension mismatch");
        if (!labels.insert(label_text(p.label)).second)
            throw std::invalid_argument("k-center instance: duplicate label " +
                                        label_text(p.label));
    }
    if (require_distinct) {
        std::set<std::vector<Rational>> seen;
        for (const LabeledPoint& p : instance.points) {
            if (!seen.insert(p.position.coords).second)
                throw std::logic_error("k-center instance: coincident points at " +
                                       label_text(p.label));
        }
    }
}

KCenterInstance build(const CspInstance& instance) {
    require_valid(instance);
    if (instance.relation != BinaryRelation::Geq)
        throw std::invalid_argument("build: instance must use the >= relation");

    KCenterInstance kc;
    kc.d = instance.d;
    kc.params = make_params(instance.d, instance.delta);
    kc.k = static_cast<int>(instance.num_variables());

    // Variables in instance order: first the 2d border points of each, then
    // its core points; secondary points afterwards, edge by edge.
    std::size_t core_total = 0;
    for (std::size_t i = 0; i < instance.variables.size(); ++i) {
        auto borders = border_points(instance.variables[i], kc.params);
        kc.points.insert(kc.points.end(), borders.begin(), borders.end());
        auto cores = core_points(instance.variables[i], instance.unary[i], kc.params);
        core_total += cores.size();
        kc.points.insert(kc.points.end(), cores.begin(), cores.end());
    }
    const auto edges = constraint_edges(instance);
    for (const GridEdge& e : edges) {
        auto secondaries =
            secondary_points(instance.variables[e.from], instance.variables[e.to], kc.params);
        kc.points.insert(kc.points.end(), secondaries.begin(), secondaries.end());
    }

    const std::size_t expected = instance.num_variables() * 2 * instance.d + core_total +
                                 static_cast<std::size_t>(instance.delta) * edges.size();
    if (kc.points.size() != expected)
        throw std::logic_error("build: point count identity violated");
    validate_kcenter(kc, /*require_distinct=*/true);
    return kc;
}

}  // namespace gridgap
