#include "gridgap/csp.hpp"
#include "gridgap/json_io.hpp"
#include "gridgap/kcenter.hpp"
#include "gridgap/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace gridgap;

namespace {

// Assignments cross the boundary as plain lists of domain values; exact
// coordinates cross as "p/q" strings so nothing is ever rounded.

std::vector<std::string> coord_strings(const Point& p) {
    std::vector<std::string> out;
    out.reserve(p.dimension());
    for (const Rational& c : p.coords) out.push_back(c.str());
    return out;
}

Assignment to_assignment(const std::vector<DomainValue>& values) { return Assignment{values}; }

BinaryRelation relation_from(const std::string& text) {
    if (text == "geq") return BinaryRelation::Geq;
    if (text == "leq") return BinaryRelation::Leq;
    throw std::invalid_argument("relation must be \"geq\" or \"leq\"");
}

std::string relation_text(BinaryRelation relation) {
    return relation == BinaryRelation::Geq ? "geq" : "leq";
}

}  // namespace

PYBIND11_MODULE(_gridgap, m) {
    m.doc() = "exact gap reduction from grid CSPs to discrete k-center";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    py::class_<ReductionParams>(m, "ReductionParams")
        .def_readonly("d", &ReductionParams::d)
        .def_readonly("delta", &ReductionParams::delta)
        .def_property_readonly("r", [](const ReductionParams& p) { return p.r.str(); })
        .def_property_readonly("epsilon",
                               [](const ReductionParams& p) { return p.epsilon.str(); })
        .def("r_sq", [](const ReductionParams& p) { return p.r_sq().str(); })
        .def("two_r_sq", [](const ReductionParams& p) { return p.two_r_sq().str(); })
        .def("anchor_sq", [](const ReductionParams& p) { return p.anchor_sq().str(); })
        .def("gap_sq", [](const ReductionParams& p) { return p.gap_sq().str(); })
        .def("__repr__", [](const ReductionParams& p) {
            return "ReductionParams(r=" + p.r.str() + ", epsilon=" + p.epsilon.str() + ")";
        });

    m.def("make_params", &make_params, py::arg("d"), py::arg("delta"));

    py::class_<CspInstance>(m, "CspInstance")
        .def(py::init([](int d, int N, int delta, std::vector<GridPoint> variables,
                         std::vector<std::vector<DomainValue>> unary,
                         const std::string& relation) {
                 CspInstance csp;
                 csp.d = d;
                 csp.N = N;
                 csp.delta = delta;
                 csp.relation = relation_from(relation);
                 csp.variables = std::move(variables);
                 csp.unary = std::move(unary);
                 require_valid(csp);
                 return csp;
             }),
             py::arg("d"), py::arg("N"), py::arg("delta"), py::arg("variables"),
             py::arg("unary"), py::arg("relation") = "geq")
        .def_readonly("d", &CspInstance::d)
        .def_readonly("N", &CspInstance::N)
        .def_readonly("delta", &CspInstance::delta)
        .def_readonly("variables", &CspInstance::variables)
        .def_readonly("unary", &CspInstance::unary)
        .def_property_readonly(
            "relation", [](const CspInstance& c) { return relation_text(c.relation); })
        .def("num_variables", &CspInstance::num_variables)
        .def("to_json", [](const CspInstance& c) { return csp_to_json(c).dump(2); })
        .def_static("from_json",
                    [](const std::string& text) { return csp_from_json(Json::parse(text)); })
        .def("__repr__", [](const CspInstance& c) {
            return "CspInstance(d=" + std::to_string(c.d) + ", N=" + std::to_string(c.N) +
                   ", delta=" + std::to_string(c.delta) + ", " +
                   std::to_string(c.num_variables()) + " variables)";
        });

    m.def(
        "random_instance",
        [](int d, int N, int delta, std::size_t num_vars, double density, std::uint64_t seed,
           const std::string& relation) {
            GeneratorConfig config;
            config.d = d;
            config.N = N;
            config.delta = delta;
            config.num_vars = num_vars;
            config.density = density;
            config.seed = seed;
            config.relation = relation_from(relation);
            return random_instance(config);
        },
        py::arg("d"), py::arg("N"), py::arg("delta"), py::arg("num_vars"),
        py::arg("density") = 1.0, py::arg("seed") = 0, py::arg("relation") = "geq");

    m.def("constraint_edges", [](const CspInstance& csp) {
        std::vector<std::tuple<std::size_t, std::size_t, int>> out;
        for (const GridEdge& e : constraint_edges(csp)) out.emplace_back(e.from, e.to, e.axis);
        return out;
    });
    m.def("is_satisfying", [](const CspInstance& csp, const std::vector<DomainValue>& values) {
        return is_satisfying(csp, to_assignment(values));
    });
    m.def("solve", [](const CspInstance& csp) -> std::optional<std::vector<DomainValue>> {
        const auto f = solve(csp);
        if (!f) return std::nullopt;
        return f->values;
    });
    m.def("reflect_unary", &reflect_unary);
    m.def("leq_to_geq", &leq_to_geq);

    py::class_<LabeledPoint>(m, "LabeledPoint")
        .def_property_readonly("label",
                               [](const LabeledPoint& p) { return label_text(p.label); })
        .def_property_readonly("coords",
                               [](const LabeledPoint& p) { return coord_strings(p.position); })
        .def("__repr__", [](const LabeledPoint& p) { return label_text(p.label); });

    py::class_<KCenterInstance>(m, "KCenterInstance")
        .def_readonly("d", &KCenterInstance::d)
        .def_readonly("k", &KCenterInstance::k)
        .def_readonly("params", &KCenterInstance::params)
        .def_readonly("points", &KCenterInstance::points)
        .def("__len__", &KCenterInstance::size)
        .def("to_json", [](const KCenterInstance& kc) { return kcenter_to_json(kc).dump(2); })
        .def_static("from_json", [](const std::string& text) {
            return kcenter_from_json(Json::parse(text));
        })
        .def("__repr__", [](const KCenterInstance& kc) {
            return "KCenterInstance(n=" + std::to_string(kc.size()) +
                   ", k=" + std::to_string(kc.k) + ")";
        });

    m.def("build", &build, py::arg("csp"));

    m.def(
        "covering_radius_sq",
        [](const KCenterInstance& kc, const std::vector<std::size_t>& centers) {
            return covering_radius_sq(kc, CenterSet{centers}).value.str();
        },
        py::arg("instance"), py::arg("centers"));
    m.def(
        "exact_solve",
        [](const KCenterInstance& kc, int k, std::uint64_t budget) {
            const ExactSolveResult r = exact_solve(kc, k, budget);
            return py::make_tuple(r.centers.indices, r.radius_sq.value.str());
        },
        py::arg("instance"), py::arg("k"), py::arg("budget") = 10'000'000ull);
    m.def(
        "farthest_first",
        [](const KCenterInstance& kc, int k, std::size_t start_index) {
            return farthest_first(kc, k, start_index).indices;
        },
        py::arg("instance"), py::arg("k"), py::arg("start_index") = 0);
    m.def(
        "gap_decide",
        [](const KCenterInstance& kc, std::uint64_t budget) {
            const GapDecision g = gap_decide(kc, budget);
            return py::make_tuple(verdict_text(g.verdict), g.opt_sq.str(), g.centers.indices);
        },
        py::arg("instance"), py::arg("budget") = 10'000'000ull);

    m.def("centers_from_assignment",
          [](const CspInstance& csp, const KCenterInstance& kc,
             const std::vector<DomainValue>& values) {
              return centers_from_assignment(csp, kc, to_assignment(values)).indices;
          });
    m.def("decode_assignment",
          [](const CspInstance& csp, const KCenterInstance& kc,
             const std::vector<std::size_t>& centers)
              -> std::optional<std::vector<DomainValue>> {
              const auto f = decode_assignment(csp, kc, CenterSet{centers});
              if (!f) return std::nullopt;
              return f->values;
          });

    py::class_<Witness>(m, "Witness")
        .def_readonly("label_a", &Witness::label_a)
        .def_readonly("label_b", &Witness::label_b)
        .def_readonly("relation", &Witness::relation)
        .def_property_readonly("dist_sq", [](const Witness& w) { return w.dist_sq.str(); })
        .def_property_readonly("threshold_sq",
                               [](const Witness& w) { return w.threshold_sq.str(); });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("comparisons", &CheckResult::comparisons)
        .def_readonly("detail", &CheckResult::detail)
        .def_readonly("witness", &CheckResult::witness)
        .def("__repr__", [](const CheckResult& c) {
            return std::string(c.passed ? "[pass] " : "[FAIL] ") + c.name;
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("instance_id", &VerificationReport::instance_id)
        .def_readonly("checks", &VerificationReport::checks)
        .def_readonly("elapsed_seconds", &VerificationReport::elapsed_seconds)
        .def("ok", &VerificationReport::ok)
        .def("to_json", [](const VerificationReport& r) { return report_to_json(r).dump(2); })
        .def("to_text", [](const VerificationReport& r) { return report_to_text(r); });

    m.def("verify_lemmas", &verify_lemmas, py::arg("instance"), py::arg("instance_id") = "");
    m.def(
        "verify_gap",
        [](const CspInstance& csp, std::uint64_t solver_budget, std::uint64_t subset_budget,
           bool require_exhaustive, const std::string& instance_id) {
            GapCheckOptions options;
            options.solver_budget = solver_budget;
            options.subset_budget = subset_budget;
            options.require_exhaustive = require_exhaustive;
            return verify_gap(csp, options, instance_id);
        },
        py::arg("csp"), py::arg("solver_budget") = 10'000'000ull,
        py::arg("subset_budget") = 1'000'000ull, py::arg("require_exhaustive") = false,
        py::arg("instance_id") = "");
}
