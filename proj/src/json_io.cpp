#include "gridgap/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <fstream>
#include <sstream>

namespace gridgap {

namespace {

Json grid_to_json(const GridPoint& p) { return Json(p); }

GridPoint grid_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string("json: ") + what + " must be a nonempty array");
    GridPoint out;
    out.reserve(j.size());
    for (const Json& c : j) {
        if (!c.is_number_integer())
            throw std::invalid_argument(std::string("json: ") + what +
                                        " must contain only integers");
        out.push_back(c.get<int>());
    }
    return out;
}

const Json& field(const Json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("json: missing field \"") + name + "\"");
    return *it;
}

int int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer())
        throw std::invalid_argument(std::string("json: field \"") + name +
                                    "\" must be an integer");
    return f.get<int>();
}

Rational rational_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string())
        throw std::invalid_argument(std::string("json: field \"") + name +
                                    "\" must be a \"p/q\" string");
    return Rational::parse(f.get<std::string>());
}

/// Invert eps = 1/(16(d-1)delta^2) when it is exactly of that shape;
/// hand-assembled instances with other eps values keep delta = 0.
int recover_delta(int d, const Rational& epsilon) {
    if (d < 2 || epsilon.sign() <= 0) return 0;
    const Rational delta_sq = Rational(1) / (16 * (d - 1) * epsilon);
    if (delta_sq.denominator() != 1) return 0;
    const BigInt root = boost::multiprecision::sqrt(delta_sq.numerator());
    if (root * root != delta_sq.numerator()) return 0;
    return root.convert_to<int>();
}

}  // namespace

Json csp_to_json(const CspInstance& instance) {
    Json j;
    j["kind"] = instance.relation == BinaryRelation::Geq ? "geq-csp" : "leq-csp";
    j["d"] = instance.d;
    j["N"] = instance.N;
    j["delta"] = instance.delta;
    Json vars = Json::array();
    for (const GridPoint& v : instance.variables) vars.push_back(grid_to_json(v));
    j["variables"] = std::move(vars);
    Json unary = Json::array();
    for (const auto& relation : instance.unary) {
        Json values = Json::array();
        for (const DomainValue& x : relation) values.push_back(grid_to_json(x));
        unary.push_back(std::move(values));
    }
    j["unary"] = std::move(unary);
    return j;
}

CspInstance csp_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    CspInstance instance;
    if (kind == "geq-csp")
        instance.relation = BinaryRelation::Geq;
    else if (kind == "leq-csp")
        instance.relation = BinaryRelation::Leq;
    else
        throw std::invalid_argument("json: kind must be \"geq-csp\" or \"leq-csp\"");
    instance.d = int_field(j, "d");
    instance.N = int_field(j, "N");
    instance.delta = int_field(j, "delta");
    const Json& vars = field(j, "variables");
    if (!vars.is_array()) throw std::invalid_argument("json: \"variables\" must be an array");
    for (const Json& v : vars) instance.variables.push_back(grid_from_json(v, "variable"));
    const Json& unary = field(j, "unary");
    if (!unary.is_array()) throw std::invalid_argument("json: \"unary\" must be an array");
    for (const Json& relation : unary) {
        if (!relation.is_array())
            throw std::invalid_argument("json: each unary relation must be an array");
        std::vector<DomainValue> values;
        for (const Json& x : relation) values.push_back(grid_from_json(x, "unary value"));
        instance.unary.push_back(std::move(values));
    }
    require_valid(instance);
    return instance;
}

Json label_to_json(const PointLabel& label) {
    Json j;
    if (const auto* b = std::get_if<BorderLabel>(&label)) {
        j["type"] = "border";
        j["variable"] = grid_to_json(b->variable);
        j["axis"] = b->axis;
        j["sign"] = b->sign > 0 ? "+" : "-";
    } else if (const auto* c = std::get_if<CoreLabel>(&label)) {
        j["type"] = "core";
        j["variable"] = grid_to_json(c->variable);
        j["value"] = grid_to_json(c->value);
    } else {
        const auto& s = std::get<SecondaryLabel>(label);
        j["type"] = "secondary";
        j["from"] = grid_to_json(s.from);
        j["to"] = grid_to_json(s.to);
        j["level"] = s.level;
    }
    return j;
}

PointLabel label_from_json(const Json& j) {
    const Json& type = field(j, "type");
    if (type == "border") {
        BorderLabel b;
        b.variable = grid_from_json(field(j, "variable"), "label variable");
        b.axis = int_field(j, "axis");
        const Json& sign = field(j, "sign");
        if (sign == "+")
            b.sign = +1;
        else if (sign == "-")
            b.sign = -1;
        else
            throw std::invalid_argument("json: border sign must be \"+\" or \"-\"");
        if (b.axis < 1 || b.axis > static_cast<int>(b.variable.size()))
            throw std::invalid_argument("json: border axis out of range");
        return b;
    }
    if (type == "core") {
        CoreLabel c;
        c.variable = grid_from_json(field(j, "variable"), "label variable");
        c.value = grid_from_json(field(j, "value"), "label value");
        return c;
    }
    if (type == "secondary") {
        SecondaryLabel s;
        s.from = grid_from_json(field(j, "from"), "label from");
        s.to = grid_from_json(field(j, "to"), "label to");
        s.level = int_field(j, "level");
        if (s.from.size() != s.to.size())
            throw std::invalid_argument("json: secondary endpoints differ in dimension");
        int axis = 0;
        for (std::size_t i = 0; i < s.from.size(); ++i) {
            if (s.from[i] == s.to[i]) continue;
            if (s.to[i] == s.from[i] + 1 && axis == 0)
                axis = static_cast<int>(i) + 1;
            else
                throw std::invalid_argument("json: secondary endpoints are not axis successors");
        }
        if (axis == 0)
            throw std::invalid_argument("json: secondary endpoints are not axis successors");
        s.axis = axis;
        if (s.level < 1) throw std::invalid_argument("json: secondary level must be >= 1");
        return s;
    }
    throw std::invalid_argument("json: label type must be border, core or secondary");
}

Json kcenter_to_json(const KCenterInstance& instance) {
    Json j;
    j["kind"] = "kcenter";
    j["d"] = instance.d;
    j["k"] = instance.k;
    j["r"] = instance.params.r.str();
    j["epsilon"] = instance.params.epsilon.str();
    Json points = Json::array();
    for (const LabeledPoint& p : instance.points) {
        Json entry;
        entry["label"] = label_to_json(p.label);
        Json coords = Json::array();
        Json approx = Json::array();
        for (const Rational& c : p.position.coords) {
            coords.push_back(c.str());
            approx.push_back(c.to_double());
        }
        entry["coords"] = std::move(coords);
        entry["approx"] = std::move(approx);
        points.push_back(std::move(entry));
    }
    j["points"] = std::move(points);
    return j;
}

KCenterInstance kcenter_from_json(const Json& j) {
    if (field(j, "kind") != "kcenter")
        throw std::invalid_argument("json: kind must be \"kcenter\"");
    KCenterInstance instance;
    instance.d = int_field(j, "d");
    instance.k = int_field(j, "k");
    instance.params.d = instance.d;
    instance.params.r = rational_field(j, "r");
    instance.params.epsilon = rational_field(j, "epsilon");
    instance.params.delta = recover_delta(instance.d, instance.params.epsilon);
    const Json& points = field(j, "points");
    if (!points.is_array() || points.empty())
        throw std::invalid_argument("json: \"points\" must be a nonempty array");
    for (const Json& entry : points) {
        LabeledPoint p{label_from_json(field(entry, "label")), Point({Rational(0)})};
        const Json& coords = field(entry, "coords");
        if (!coords.is_array() || coords.size() != static_cast<std::size_t>(instance.d))
            throw std::invalid_argument("json: point coords must have d entries");
        std::vector<Rational> parsed;
        parsed.reserve(coords.size());
        for (const Json& c : coords) {
            if (!c.is_string())
                throw std::invalid_argument("json: coords must be \"p/q\" strings");
            parsed.push_back(Rational::parse(c.get<std::string>()));
        }
        p.position = Point(std::move(parsed));
        instance.points.push_back(std::move(p));
    }
    validate_kcenter(instance);
    return instance;
}

Json solver_result_to_json(const KCenterInstance& instance, const std::string& method,
                           const CenterSet& centers, const Rational& opt_sq) {
    Json j;
    j["k"] = static_cast<int>(centers.size());
    Json labels = Json::array();
    for (std::size_t idx : centers.indices)
        labels.push_back(label_to_json(instance.points[idx].label));
    j["centers"] = std::move(labels);
    j["opt_sq"] = opt_sq.str();
    j["method"] = method;
    return j;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["kind"] = "report";
    j["instance"] = report.instance_id;
    j["ok"] = report.ok();
    j["elapsed_seconds"] = report.elapsed_seconds;
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["comparisons"] = c.comparisons;
        entry["detail"] = c.detail;
        if (c.witness) {
            Json w;
            w["a"] = c.witness->label_a;
            w["b"] = c.witness->label_b;
            w["dist_sq"] = c.witness->dist_sq.str();
            w["threshold_sq"] = c.witness->threshold_sq.str();
            w["relation"] = c.witness->relation;
            entry["witness"] = std::move(w);
        }
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << (report.instance_id.empty() ? "instance" : report.instance_id) << ": "
        << (report.ok() ? "PASS" : "FAIL") << '\n';
    for (const CheckResult& c : report.checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
        if (c.witness) {
            out << "         witness: dist^2(" << c.witness->label_a << ", " << c.witness->label_b
                << ") = " << c.witness->dist_sq.str() << ", required " << c.witness->relation
                << ' ' << c.witness->threshold_sq.str() << '\n';
        }
    }
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace gridgap
