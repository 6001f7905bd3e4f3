// Command-line front end: generate CSP instances, reduce them to k-center
// point sets, solve either kind, and machine-check the reduction.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 enumeration budget exceeded.

#include "gridgap/csp.hpp"
#include "gridgap/json_io.hpp"
#include "gridgap/kcenter.hpp"
#include "gridgap/reduction.hpp"
#include "gridgap/verifier.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace gridgap;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

/// JSON payloads go to --out when given, else stdout; the human summary then
/// goes to whichever stream stays clean.
void emit(const std::string& out_path, const Json& payload, const std::string& summary) {
    if (!out_path.empty()) {
        save_json_file(out_path, payload);
        if (!summary.empty()) std::cout << summary;
    } else {
        std::cout << payload.dump(2) << '\n';
        if (!summary.empty()) std::cerr << summary;
    }
}

struct GenOptions {
    GeneratorConfig config;
    std::string relation = "geq";
    std::string out;
};

int run_gen(const GenOptions& opt) {
    GeneratorConfig config = opt.config;
    config.relation = opt.relation == "leq" ? BinaryRelation::Leq : BinaryRelation::Geq;
    const CspInstance instance = random_instance(config);

    std::size_t relation_size = 0;
    for (const auto& values : instance.unary) relation_size += values.size();
    std::ostringstream summary;
    summary << "|V| = " << instance.num_variables()
            << ", |E| = " << constraint_edges(instance).size() << ", sum|R_a| = " << relation_size
            << '\n';
    emit(opt.out, csp_to_json(instance), summary.str());
    return kExitOk;
}

struct ReduceOptions {
    std::string in;
    std::string out;
};

int run_reduce(const ReduceOptions& opt) {
    CspInstance csp = csp_from_json(load_json_file(opt.in));
    if (csp.relation == BinaryRelation::Leq) csp = leq_to_geq(csp);
    const KCenterInstance kc = build(csp);

    std::ostringstream summary;
    summary << "n = " << kc.size() << ", k = " << kc.k << ", r = " << kc.params.r.str()
            << ", epsilon = " << kc.params.epsilon.str() << '\n';
    emit(opt.out, kcenter_to_json(kc), summary.str());
    return kExitOk;
}

struct SolveOptions {
    std::string in;
    std::string out;
    std::string method = "exact";
    int k = 0;  // 0: use the instance's own k
    std::uint64_t budget = 10'000'000;
    std::string format = "json";
};

int run_solve(const SolveOptions& opt) {
    const Json input = load_json_file(opt.in);
    const auto kind_it = input.find("kind");
    const std::string kind = kind_it == input.end() ? "" : kind_it->get<std::string>();

    if (kind == "geq-csp" || kind == "leq-csp") {
        if (opt.method != "exact" || opt.k != 0)
            throw std::invalid_argument("solve: --method and --k apply to point-set inputs only");
        const CspInstance csp = csp_from_json(input);
        const std::optional<Assignment> f = solve(csp);
        Json result;
        result["kind"] = "csp-result";
        result["status"] = f ? "satisfiable" : "unsatisfiable";
        if (f) {
            Json assignment = Json::array();
            for (std::size_t vi = 0; vi < csp.variables.size(); ++vi) {
                Json entry;
                entry["variable"] = Json(csp.variables[vi]);
                entry["value"] = Json(f->values[vi]);
                assignment.push_back(std::move(entry));
            }
            result["assignment"] = std::move(assignment);
        } else {
            result["assignment"] = nullptr;
        }
        if (opt.format == "text") {
            std::cout << result["status"].get<std::string>() << '\n';
            if (!opt.out.empty()) save_json_file(opt.out, result);
        } else {
            emit(opt.out, result, "");
        }
        return kExitOk;
    }

    if (kind != "kcenter")
        throw std::invalid_argument("solve: input kind must be geq-csp, leq-csp or kcenter");
    const KCenterInstance kc = kcenter_from_json(input);
    const int k = opt.k == 0 ? kc.k : opt.k;

    Json result;
    std::string text;
    if (opt.method == "exact") {
        const ExactSolveResult solved = exact_solve(kc, k, opt.budget);
        result = solver_result_to_json(kc, "exact", solved.centers, solved.radius_sq.value);
        text = "opt_sq = " + solved.radius_sq.value.str() + '\n';
    } else if (opt.method == "farthest-first") {
        const CenterSet centers = farthest_first(kc, k);
        const RadiusSq radius = covering_radius_sq(kc, centers);
        result = solver_result_to_json(kc, "farthest-first", centers, radius.value);
        text = "radius_sq = " + radius.value.str() + '\n';
    } else if (opt.method == "gap") {
        if (opt.k != 0 && opt.k != kc.k)
            throw std::invalid_argument("solve: the gap decision always uses the instance's k");
        const GapDecision decision = gap_decide(kc, opt.budget);
        result["kind"] = "gap-result";
        result["verdict"] = verdict_text(decision.verdict);
        result["opt_sq"] = decision.opt_sq.str();
        Json labels = Json::array();
        for (std::size_t idx : decision.centers.indices)
            labels.push_back(label_to_json(kc.points[idx].label));
        result["centers"] = std::move(labels);
        text = verdict_text(decision.verdict) + '\n';
    } else {
        throw std::invalid_argument("solve: --method must be exact, farthest-first or gap");
    }

    if (opt.format == "text") {
        std::cout << text;
        if (!opt.out.empty()) save_json_file(opt.out, result);
    } else {
        emit(opt.out, result, "");
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string in;
    std::string out;
    std::uint64_t budget = 10'000'000;
    std::uint64_t subset_budget = 1'000'000;
    bool exhaustive = false;
    bool lemmas_only = false;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt) {
    const Json input = load_json_file(opt.in);
    const auto kind_it = input.find("kind");
    const std::string kind = kind_it == input.end() ? "" : kind_it->get<std::string>();

    std::vector<VerificationReport> reports;
    if (kind == "kcenter") {
        reports.push_back(verify_lemmas(kcenter_from_json(input), opt.in));
    } else if (kind == "geq-csp" || kind == "leq-csp") {
        const CspInstance csp = csp_from_json(input);
        const CspInstance geq = csp.relation == BinaryRelation::Leq ? leq_to_geq(csp) : csp;
        reports.push_back(verify_lemmas(build(geq), opt.in));
        if (!opt.lemmas_only) {
            GapCheckOptions gap_options;
            gap_options.solver_budget = opt.budget;
            gap_options.subset_budget = opt.subset_budget;
            gap_options.require_exhaustive = opt.exhaustive;
            reports.push_back(verify_gap(csp, gap_options, opt.in));
        }
    } else {
        throw std::invalid_argument("verify: input kind must be geq-csp, leq-csp or kcenter");
    }

    bool ok = true;
    Json bundle;
    bundle["kind"] = "report-set";
    Json entries = Json::array();
    std::string text;
    for (const VerificationReport& report : reports) {
        ok = ok && report.ok();
        entries.push_back(report_to_json(report));
        text += report_to_text(report);
    }
    bundle["ok"] = ok;
    bundle["reports"] = std::move(entries);

    if (opt.format == "text") {
        std::cout << text;
        if (!opt.out.empty()) save_json_file(opt.out, bundle);
    } else {
        emit(opt.out, bundle, "");
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric >=-CSP to k-center reduction toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random CSP instance");
    cmd_gen->add_option("--d", gen.config.d, "dimension (>= 2)")->capture_default_str();
    cmd_gen->add_option("--N", gen.config.N, "grid side")->capture_default_str();
    cmd_gen->add_option("--delta", gen.config.delta, "domain side")->capture_default_str();
    cmd_gen->add_option("--vars", gen.config.num_vars, "number of variables")
        ->capture_default_str();
    cmd_gen->add_option("--density", gen.config.density, "unary value keep probability")
        ->capture_default_str();
    cmd_gen->add_option("--seed", gen.config.seed, "generator seed")->capture_default_str();
    cmd_gen->add_option("--relation", gen.relation, "constraint direction")
        ->check(CLI::IsMember({"geq", "leq"}))
        ->capture_default_str();
    cmd_gen->add_option("--out", gen.out, "output file (stdout when omitted)");

    ReduceOptions reduce;
    CLI::App* cmd_reduce = app.add_subcommand("reduce", "compile a CSP into a k-center instance");
    cmd_reduce->add_option("--in", reduce.in, "CSP JSON file")->required();
    cmd_reduce->add_option("--out", reduce.out, "output file (stdout when omitted)");

    SolveOptions solve_opt;
    CLI::App* cmd_solve = app.add_subcommand("solve", "solve a CSP or k-center instance");
    cmd_solve->add_option("--in", solve_opt.in, "input JSON file")->required();
    cmd_solve->add_option("--method", solve_opt.method, "point-set method")
        ->check(CLI::IsMember({"exact", "farthest-first", "gap"}))
        ->capture_default_str();
    cmd_solve->add_option("--k", solve_opt.k, "center count (default: instance k)");
    cmd_solve->add_option("--budget", solve_opt.budget, "subset enumeration budget")
        ->capture_default_str();
    cmd_solve->add_option("--format", solve_opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd_solve->add_option("--out", solve_opt.out, "result file (stdout when omitted)");

    VerifyOptions verify_opt;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check the distance lemmas and both gap directions");
    cmd_verify->add_option("--in", verify_opt.in, "CSP or point-set JSON file")->required();
    cmd_verify->add_option("--budget", verify_opt.budget, "exact solver budget")
        ->capture_default_str();
    cmd_verify->add_option("--subset-budget", verify_opt.subset_budget,
                           "all-subset soundness budget")
        ->capture_default_str();
    cmd_verify->add_flag("--exhaustive", verify_opt.exhaustive,
                         "fail instead of skipping the all-subset scan");
    cmd_verify->add_option("--format", verify_opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd_verify->add_option("--out", verify_opt.out, "report file");

    VerifyOptions lemmas_opt;
    lemmas_opt.lemmas_only = true;
    CLI::App* cmd_lemmas = app.add_subcommand("lemmas", "check the distance lemmas only");
    cmd_lemmas->add_option("--in", lemmas_opt.in, "CSP or point-set JSON file")->required();
    cmd_lemmas->add_option("--format", lemmas_opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd_lemmas->add_option("--out", lemmas_opt.out, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_reduce->parsed()) return run_reduce(reduce);
        if (cmd_solve->parsed()) return run_solve(solve_opt);
        if (cmd_verify->parsed()) return run_verify(verify_opt);
        if (cmd_lemmas->parsed()) return run_verify(lemmas_opt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
