// ocsplit command-line front end: solve / sweep / errors / oracle subcommands.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ocsplit/analytic.hpp"
#include "ocsplit/dynamics.hpp"
#include "ocsplit/format.hpp"
#include "ocsplit/metrics.hpp"
#include "ocsplit/problem.hpp"
#include "ocsplit/solvers.hpp"
#include "ocsplit/sweeps.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ocsplit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Method parse_method(const std::string& name) {
    if (name == "dykstra") return Method::Dykstra;
    if (name == "dr") return Method::DouglasRachford;
    if (name == "aac") return Method::AragonArtachoCampoy;
    if (name == "map") return Method::Alternating;
    throw UsageError("--method: unknown method '" + name + "'");
}

ProjectionOrder parse_order(const std::string& name) {
    if (name == "box-first") return ProjectionOrder::BoxFirst;
    if (name == "affine-first") return ProjectionOrder::AffineFirst;
    throw UsageError("--order: unknown order '" + name + "'");
}

JacobianMode parse_jacobian(const std::string& name) {
    if (name == "paper" || name == "continuous") return JacobianMode::Continuous;
    if (name == "exact" || name == "discrete") return JacobianMode::ExactDiscrete;
    throw UsageError("--jacobian: unknown mode '" + name + "'");
}

std::vector<double> parse_value_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            values.push_back(parse_double(item));
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": bad value '" + item + "'");
        }
    }
    if (values.empty()) {
        throw UsageError(std::string(flag) + ": empty list");
    }
    return values;
}

// number of plain fractional digits, or -1 when not a plain decimal
int decimal_places(const std::string& text) {
    if (text.find_first_of("eE") != std::string::npos) return -1;
    const auto dot = text.find('.');
    if (dot == std::string::npos) return 0;
    const int places = static_cast<int>(text.size() - dot - 1);
    return places <= 12 ? places : -1;
}

// "lo:hi:step", inclusive of hi up to rounding slack. Plain decimal inputs
// are expanded with scaled-integer arithmetic so the grid values stay clean
// decimals instead of accumulating rounding.
std::vector<double> parse_grid_spec(const std::string& text, const char* flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) {
        throw UsageError(std::string(flag) + ": expected lo:hi:step, got '" + text + "'");
    }
    double lo, hi, step;
    try {
        lo = parse_double(parts[0]);
        hi = parse_double(parts[1]);
        step = parse_double(parts[2]);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": bad number in '" + text + "'");
    }
    if (!(step > 0.0) || hi < lo) {
        throw UsageError(std::string(flag) + ": need lo <= hi and step > 0 in '" + text + "'");
    }

    std::vector<double> values;
    const int p0 = decimal_places(parts[0]);
    const int p2 = decimal_places(parts[2]);
    if (p0 >= 0 && p2 >= 0) {
        const int places = std::max(p0, p2);
        const double scale = std::pow(10.0, places);
        const long lo_i = std::lround(lo * scale);
        const long step_i = std::lround(step * scale);
        for (long v = lo_i;; v += step_i) {
            const double value = static_cast<double>(v) / scale;
            if (value > hi + step * 1e-9) break;
            values.push_back(value);
        }
    } else {
        for (long k = 0;; ++k) {
            const double v = lo + static_cast<double>(k) * step;
            if (v > hi + step * 1e-9) break;
            values.push_back(v);
        }
    }
    return values;
}

// Shared instance / solver flags
struct CommonFlags {
    double s0 = 0.0, sf = 0.0, v0 = 1.0, vf = 0.0, a = 2.5;
    long n = 2000;
    double eps = 1e-8;
    long max_iter = 1'000'000;
    std::string jacobian = "paper";

    void attach(CLI::App* cmd) {
        cmd->add_option("--s0", s0, "position at t=0");
        cmd->add_option("--sf", sf, "position at t=1");
        cmd->add_option("--v0", v0, "velocity at t=0");
        cmd->add_option("--vf", vf, "velocity at t=1");
        cmd->add_option("--a", a, "control magnitude bound (> 0)");
        cmd->add_option("--n", n, "number of grid subintervals");
        cmd->add_option("--eps", eps, "stopping tolerance on the max-norm step");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--jacobian", jacobian,
                        "shooting Jacobian: paper (continuous closed form) or exact "
                        "(discrete sensitivities)");
    }

    ProblemSpec spec() const {
        ProblemSpec s{s0, sf, v0, vf, a};
        if (!(a > 0.0)) throw UsageError("--a: control bound must be positive");
        s.validate();
        return s;
    }

    Grid grid() const {
        if (n < 2) throw UsageError("--n: need at least 2 subintervals");
        return Grid(n);
    }
};

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!os) throw std::runtime_error("cannot open output file " + path);
    return os;
}

void write_control_csv(const ControlVector& u, const Grid& grid, std::ostream& os) {
    os << "t,u\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        os << format_double(grid.node(static_cast<long>(i))) << ',' << format_double(u[i])
           << '\n';
    }
}

// ---------------------------------------------------------------- solve ----

struct SolveFlags {
    CommonFlags common;
    std::string method = "dykstra";
    std::string order = "box-first";
    double lambda = 0.5, alpha = 1.0, beta = 0.5;
    double init_const = 0.0;
    std::string init_file;
    std::string trace_path, out_path;
    bool emit_config = false;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* init_const_opt = nullptr;
};

// u column of a t,u CSV, as written by solve --out
ControlVector load_control_csv(const std::string& path, long n) {
    std::ifstream is(path);
    if (!is) throw UsageError("--init-file: cannot open " + path);
    std::string line;
    if (!std::getline(is, line) || line != "t,u") {
        throw UsageError("--init-file: expected a t,u CSV header in " + path);
    }
    ControlVector u;
    while (std::getline(is, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw UsageError("--init-file: malformed row '" + line + "'");
        }
        u.samples.push_back(parse_double(line.substr(comma + 1)));
    }
    if (u.size() != static_cast<std::size_t>(n)) {
        throw UsageError("--init-file: control has " + std::to_string(u.size()) +
                         " samples, grid needs " + std::to_string(n));
    }
    return u;
}

ordered_json method_params(const SolverConfig& cfg) {
    ordered_json params;
    if (cfg.method == Method::DouglasRachford) params["lambda"] = cfg.lambda;
    if (cfg.method == Method::AragonArtachoCampoy) {
        params["alpha"] = cfg.alpha;
        params["beta"] = cfg.beta;
    }
    params["jacobian"] = to_string(cfg.jacobian);
    return params;
}

int run_solve(const SolveFlags& flags) {
    const Method method = parse_method(flags.method);
    if (flags.lambda_opt->count() > 0 && method != Method::DouglasRachford) {
        throw UsageError("--lambda is only valid with --method dr");
    }
    if (flags.alpha_opt->count() > 0 && method != Method::AragonArtachoCampoy) {
        throw UsageError("--alpha is only valid with --method aac");
    }
    if (flags.beta_opt->count() > 0 && method != Method::AragonArtachoCampoy) {
        throw UsageError("--beta is only valid with --method aac");
    }

    const ProblemSpec spec = flags.common.spec();
    const Grid grid = flags.common.grid();

    SolverConfig cfg;
    cfg.method = method;
    cfg.order = parse_order(flags.order);
    cfg.epsilon = flags.common.eps;
    cfg.max_iter = flags.common.max_iter;
    cfg.lambda = flags.lambda;
    cfg.alpha = flags.alpha;
    cfg.beta = flags.beta;
    cfg.jacobian = parse_jacobian(flags.common.jacobian);
    if (flags.init_const_opt->count() > 0 && !flags.init_file.empty()) {
        throw UsageError("--init-const and --init-file are mutually exclusive");
    }
    if (flags.init_const_opt->count() > 0) {
        cfg.initial = ControlVector::constant(static_cast<std::size_t>(grid.n()),
                                              flags.init_const);
    } else if (!flags.init_file.empty()) {
        cfg.initial = load_control_csv(flags.init_file, grid.n());
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (method == Method::AragonArtachoCampoy && cfg.alpha == 1.0) {
        std::cerr << "note: alpha = 1 accepted; the convergence guarantee assumes alpha < 1\n";
    }

    if (flags.emit_config) {
        ordered_json resolved;
        resolved["command"] = "solve";
        resolved["method"] = to_string(method);
        resolved["order"] = flags.order;
        resolved["n"] = grid.n();
        resolved["eps"] = cfg.epsilon;
        resolved["max_iter"] = cfg.max_iter;
        resolved["spec"] = {{"s0", spec.s0}, {"sf", spec.sf}, {"v0", spec.v0},
                            {"vf", spec.vf}, {"a", spec.a}};
        resolved["params"] = method_params(cfg);
        if (flags.init_const_opt->count() > 0) {
            resolved["initial"] = flags.init_const;
        } else if (!flags.init_file.empty()) {
            resolved["initial"] = flags.init_file;
        }
        resolved["trace"] = flags.trace_path;
        resolved["out"] = flags.out_path;
        std::cout << resolved.dump(2) << '\n';
        return kExitOk;
    }

    cfg.record_shadow = false;
    const SolveReport report = solve(spec, grid, cfg);

    if (!flags.out_path.empty()) {
        auto os = open_output(flags.out_path);
        write_control_csv(report.control, grid, os);
    }
    if (!flags.trace_path.empty()) {
        auto os = open_output(flags.trace_path);
        os << "k,residual\n";
        for (std::size_t k = 0; k < report.residuals.size(); ++k) {
            os << k << ',' << format_double(report.residuals[k]) << '\n';
        }
    }

    ordered_json summary;
    summary["method"] = to_string(method);
    summary["order"] = flags.order;
    summary["n"] = grid.n();
    summary["eps"] = cfg.epsilon;
    summary["params"] = method_params(cfg);
    summary["iterations"] = report.iterations;
    summary["converged"] = report.converged;
    summary["final_residual"] = report.residuals.back();
    std::cout << summary.dump() << '\n';
    return report.converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------- sweep ----

struct SweepFlags {
    CommonFlags common;
    std::string method = "dr";
    std::string order = "box-first";
    std::string a_list = "2.5,3,3.5,4";
    std::string lambda_grid = "0.01:0.99:0.01";
    std::string alpha_grid = "0.1:1.0:0.1";
    std::string beta_grid = "0.01:0.99:0.01";
    bool refine = false;
    int jobs = 1;
    std::string out_path = "-";
    bool emit_config = false;
    CLI::Option* lambda_grid_opt = nullptr;
    CLI::Option* alpha_grid_opt = nullptr;
    CLI::Option* beta_grid_opt = nullptr;
};

int run_sweep(const SweepFlags& flags) {
    const Method method = parse_method(flags.method);
    if (method != Method::DouglasRachford && method != Method::AragonArtachoCampoy) {
        throw UsageError("--method: sweep supports dr or aac");
    }
    if (flags.lambda_grid_opt->count() > 0 && method != Method::DouglasRachford) {
        throw UsageError("--lambda-grid is only valid with --method dr");
    }
    if ((flags.alpha_grid_opt->count() > 0 || flags.beta_grid_opt->count() > 0) &&
        method != Method::AragonArtachoCampoy) {
        throw UsageError("--alpha-grid/--beta-grid are only valid with --method aac");
    }
    if (flags.jobs < 1) throw UsageError("--jobs: need at least one worker");

    ProblemSpec spec = flags.common.spec();
    const Grid grid = flags.common.grid();
    const ProjectionOrder order = parse_order(flags.order);
    const std::vector<double> a_values = parse_value_list(flags.a_list, "--a-list");
    for (const double a : a_values) {
        if (!(a > 0.0)) throw UsageError("--a-list: bounds must be positive");
    }

    if (flags.emit_config) {
        ordered_json resolved;
        resolved["command"] = "sweep";
        resolved["method"] = to_string(method);
        resolved["order"] = flags.order;
        resolved["n"] = grid.n();
        resolved["eps"] = flags.common.eps;
        resolved["max_iter"] = flags.common.max_iter;
        resolved["a_list"] = a_values;
        if (method == Method::DouglasRachford) {
            resolved["lambda_grid"] = parse_grid_spec(flags.lambda_grid, "--lambda-grid");
        } else {
            resolved["alpha_grid"] = parse_grid_spec(flags.alpha_grid, "--alpha-grid");
            resolved["beta_grid"] = parse_grid_spec(flags.beta_grid, "--beta-grid");
        }
        resolved["refine"] = flags.refine;
        resolved["jobs"] = flags.jobs;
        resolved["out"] = flags.out_path;
        std::cout << resolved.dump(2) << '\n';
        return kExitOk;
    }

    SweepResult result;
    if (method == Method::DouglasRachford) {
        const auto lambdas = parse_grid_spec(flags.lambda_grid, "--lambda-grid");
        result = sweep_lambda(spec, grid, flags.common.eps, a_values, lambdas, order,
                              flags.common.max_iter, flags.jobs);
    } else {
        const auto alphas = parse_grid_spec(flags.alpha_grid, "--alpha-grid");
        const auto betas = parse_grid_spec(flags.beta_grid, "--beta-grid");
        result = sweep_alpha_beta(spec, grid, flags.common.eps, a_values, alphas, betas, order,
                                  flags.common.max_iter, flags.jobs);
    }
    if (flags.refine) {
        refine_minimum(result, grid, order);
    }

    if (flags.out_path == "-") {
        write_csv(result, std::cout);
    } else {
        auto os = open_output(flags.out_path);
        write_csv(result, os);
    }
    return kExitOk;
}

// --------------------------------------------------------------- errors ----

struct ErrorsFlags {
    CommonFlags common;
    std::string n_list = "1000,10000,100000";
    std::string methods = "dykstra,dr,aac";
    double lambda = 0.7466, alpha = 1.0, beta = 0.8617;
    std::string reference_path;
    long ref_n = 1'000'000;
    double ref_tol = 1e-12;
    std::string cache_dir = ".ocsplit-cache";
    bool per_iteration = false;
    std::string out_path = "-";
    bool emit_config = false;
};

ReferenceSolution obtain_reference(const ErrorsFlags& flags, const ProblemSpec& spec) {
    if (!flags.reference_path.empty()) {
        if (std::filesystem::exists(flags.reference_path)) {
            return load_reference(flags.reference_path);
        }
        const Grid ref_grid(flags.ref_n);
        const OracleSolution oracle = oracle_solve(spec, ref_grid, flags.ref_tol);
        if (!oracle.feasible) {
            throw std::runtime_error("reference oracle did not converge; instance infeasible?");
        }
        ReferenceSolution ref;
        ref.spec = spec;
        ref.n = flags.ref_n;
        ref.tol = flags.ref_tol;
        ref.c1 = oracle.c1;
        ref.c2 = oracle.c2;
        ref.feasible = true;
        ref.control = oracle.control;
        save_reference(ref, flags.reference_path);
        return ref;
    }
    return ensure_reference(spec, flags.ref_n, flags.ref_tol, flags.cache_dir);
}

int run_errors(const ErrorsFlags& flags) {
    const ProblemSpec spec = flags.common.spec();
    const std::vector<double> n_values = parse_value_list(flags.n_list, "--n-list");

    std::vector<Method> methods;
    {
        std::stringstream ss(flags.methods);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) methods.push_back(parse_method(item));
        }
        if (methods.empty()) throw UsageError("--methods: empty list");
    }

    for (const double nd : n_values) {
        const long n = static_cast<long>(nd);
        if (n < 2 || static_cast<double>(n) != nd) {
            throw UsageError("--n-list: grid sizes must be integers >= 2");
        }
        if (flags.ref_n % n != 0) {
            throw UsageError("--n-list: reference grid is not a refinement of n=" +
                             std::to_string(n));
        }
    }

    if (flags.emit_config) {
        ordered_json resolved;
        resolved["command"] = "errors";
        resolved["n_list"] = n_values;
        resolved["methods"] = flags.methods;
        resolved["eps"] = flags.common.eps;
        resolved["params"] = {{"lambda", flags.lambda}, {"alpha", flags.alpha},
                              {"beta", flags.beta}, {"jacobian", flags.common.jacobian}};
        resolved["reference"] = flags.reference_path;
        resolved["ref_n"] = flags.ref_n;
        resolved["ref_tol"] = flags.ref_tol;
        resolved["cache_dir"] = flags.cache_dir;
        resolved["per_iteration"] = flags.per_iteration;
        resolved["out"] = flags.out_path;
        std::cout << resolved.dump(2) << '\n';
        return kExitOk;
    }

    const ReferenceSolution ref = obtain_reference(flags, spec);
    const Grid ref_grid(ref.n);
    const StateTrajectory ref_states = euler_integrate(ref.control, spec, ref_grid);

    const std::filesystem::path trace_dir =
        flags.out_path == "-" ? std::filesystem::path(".")
                              : std::filesystem::path(flags.out_path).parent_path();

    std::ostringstream csv;
    csv << "method,n,sigma_u,sigma_x,iterations\n";
    for (const Method method : methods) {
        for (const double nd : n_values) {
            const long n = static_cast<long>(nd);
            const Grid grid(n);
            SolverConfig cfg;
            cfg.method = method;
            cfg.epsilon = flags.common.eps;
            cfg.max_iter = flags.common.max_iter;
            cfg.lambda = flags.lambda;
            cfg.alpha = flags.alpha;
            cfg.beta = flags.beta;
            cfg.jacobian = parse_jacobian(flags.common.jacobian);
            cfg.record_shadow = flags.per_iteration;
            const SolveReport report = solve(spec, grid, cfg);

            const double sigma_u = control_error(report.control, grid, ref.control, ref_grid);
            const StateTrajectory states = euler_integrate(report.control, spec, grid);
            const double sigma_x = state_error(states, grid, ref_states, ref_grid);
            csv << to_string(method) << ',' << n << ',' << format_double(sigma_u) << ','
                << format_double(sigma_x) << ',' << report.iterations << '\n';

            if (flags.per_iteration) {
                const ErrorTrace trace =
                    error_trace(report, spec, grid, ref.control, ref_states, ref_grid);
                const auto name = trace_dir / ("trace_" + to_string(method) + "_" +
                                               std::to_string(n) + ".csv");
                auto os = open_output(name.string());
                os << "k,residual,sigma_u,sigma_x\n";
                for (std::size_t k = 0; k < trace.sigma_u.size(); ++k) {
                    os << k << ',' << format_double(report.residuals[k]) << ','
                       << format_double(trace.sigma_u[k]) << ','
                       << format_double(trace.sigma_x[k]) << '\n';
                }
            }
        }
    }

    if (flags.out_path == "-") {
        std::cout << csv.str();
    } else {
        auto os = open_output(flags.out_path);
        os << csv.str();
    }
    return kExitOk;
}

// --------------------------------------------------------------- oracle ----

struct OracleFlags {
    CommonFlags common;
    double tol = 1e-12;
    std::string out_path;
    std::string cache_dir = ".ocsplit-cache";
    bool emit_config = false;
};

int run_oracle(const OracleFlags& flags) {
    const ProblemSpec spec = flags.common.spec();
    if (!(flags.tol > 0.0)) throw UsageError("--tol must be positive");

    if (flags.emit_config) {
        ordered_json resolved;
        resolved["command"] = "oracle";
        resolved["n"] = flags.common.n;
        resolved["tol"] = flags.tol;
        resolved["spec"] = {{"s0", spec.s0}, {"sf", spec.sf}, {"v0", spec.v0},
                            {"vf", spec.vf}, {"a", spec.a}};
        resolved["out"] = flags.out_path;
        resolved["cache_dir"] = flags.cache_dir;
        std::cout << resolved.dump(2) << '\n';
        return kExitOk;
    }

    const Grid grid = flags.common.grid();
    const OracleSolution oracle = oracle_solve(spec, grid, flags.tol);

    std::string path;
    if (oracle.feasible) {
        ReferenceSolution ref;
        ref.spec = spec;
        ref.n = grid.n();
        ref.tol = flags.tol;
        ref.c1 = oracle.c1;
        ref.c2 = oracle.c2;
        ref.feasible = true;
        ref.control = oracle.control;
        if (!flags.out_path.empty()) {
            path = flags.out_path;
        } else {
            std::filesystem::create_directories(flags.cache_dir);
            path = (std::filesystem::path(flags.cache_dir) /
                    reference_cache_name(spec, grid.n(), flags.tol))
                       .string();
        }
        save_reference(ref, path);
    }

    ordered_json summary;
    summary["n"] = grid.n();
    summary["tol"] = flags.tol;
    summary["c1"] = oracle.c1;
    summary["c2"] = oracle.c2;
    summary["feasible"] = oracle.feasible;
    summary["path"] = path;
    std::cout << summary.dump() << '\n';
    return oracle.feasible ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projection-splitting solvers for the control-bounded minimum-energy "
                 "double integrator"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one solver on one instance");
    solve_cmd->add_option("--method", solve_flags.method, "dykstra|dr|aac|map");
    solve_cmd->add_option("--order", solve_flags.order, "box-first|affine-first");
    solve_flags.common.attach(solve_cmd);
    solve_flags.lambda_opt =
        solve_cmd->add_option("--lambda", solve_flags.lambda, "Douglas-Rachford parameter (0,1)");
    solve_flags.alpha_opt =
        solve_cmd->add_option("--alpha", solve_flags.alpha, "AAC parameter (0,1]");
    solve_flags.beta_opt = solve_cmd->add_option("--beta", solve_flags.beta, "AAC parameter (0,1)");
    solve_flags.init_const_opt = solve_cmd->add_option(
        "--init-const", solve_flags.init_const, "constant starting control (default 0)");
    solve_cmd->add_option("--init-file", solve_flags.init_file,
                          "starting control from a t,u CSV");
    solve_cmd->add_option("--trace", solve_flags.trace_path, "write per-iteration residual CSV");
    solve_cmd->add_option("--out", solve_flags.out_path, "write converged control CSV (t,u)");
    solve_cmd->add_flag("--emit-config", solve_flags.emit_config,
                        "print resolved settings as JSON and exit");

    SweepFlags sweep_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "iterations-to-converge parameter sweep");
    sweep_cmd->add_option("--method", sweep_flags.method, "dr|aac");
    sweep_cmd->add_option("--order", sweep_flags.order, "box-first|affine-first");
    sweep_flags.common.attach(sweep_cmd);
    sweep_cmd->add_option("--a-list", sweep_flags.a_list, "comma-separated control bounds");
    sweep_flags.lambda_grid_opt =
        sweep_cmd->add_option("--lambda-grid", sweep_flags.lambda_grid, "lo:hi:step");
    sweep_flags.alpha_grid_opt =
        sweep_cmd->add_option("--alpha-grid", sweep_flags.alpha_grid, "lo:hi:step");
    sweep_flags.beta_grid_opt =
        sweep_cmd->add_option("--beta-grid", sweep_flags.beta_grid, "lo:hi:step");
    sweep_cmd->add_flag("--refine", sweep_flags.refine,
                        "bisection refinement around each arg-min cell");
    sweep_cmd->add_option("--jobs", sweep_flags.jobs, "worker threads");
    sweep_cmd->add_option("--out", sweep_flags.out_path, "CSV path, '-' for stdout");
    sweep_cmd->add_flag("--emit-config", sweep_flags.emit_config,
                        "print resolved settings as JSON and exit");

    ErrorsFlags errors_flags;
    CLI::App* errors_cmd =
        app.add_subcommand("errors", "errors against the cached reference solution");
    errors_flags.common.attach(errors_cmd);
    errors_cmd->add_option("--n-list", errors_flags.n_list, "comma-separated grid sizes");
    errors_cmd->add_option("--methods", errors_flags.methods, "comma-separated methods");
    errors_cmd->add_option("--lambda", errors_flags.lambda, "Douglas-Rachford parameter");
    errors_cmd->add_option("--alpha", errors_flags.alpha, "AAC parameter");
    errors_cmd->add_option("--beta", errors_flags.beta, "AAC parameter");
    errors_cmd->add_option("--reference", errors_flags.reference_path,
                           "reference cache file (built on demand when missing)");
    errors_cmd->add_option("--ref-n", errors_flags.ref_n, "reference grid size");
    errors_cmd->add_option("--ref-tol", errors_flags.ref_tol, "reference oracle tolerance");
    errors_cmd->add_option("--cache-dir", errors_flags.cache_dir, "reference cache directory");
    errors_cmd->add_flag("--per-iteration", errors_flags.per_iteration,
                         "also write trace_<method>_<n>.csv files");
    errors_cmd->add_option("--out", errors_flags.out_path, "CSV path, '-' for stdout");
    errors_cmd->add_flag("--emit-config", errors_flags.emit_config,
                         "print resolved settings as JSON and exit");

    OracleFlags oracle_flags;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "build and cache the clipped-parametric reference");
    oracle_flags.common.attach(oracle_cmd);
    oracle_cmd->add_option("--tol", oracle_flags.tol, "terminal miss tolerance");
    oracle_cmd->add_option("--out", oracle_flags.out_path, "cache file path");
    oracle_cmd->add_option("--cache-dir", oracle_flags.cache_dir, "default cache directory");
    oracle_cmd->add_flag("--emit-config", oracle_flags.emit_config,
                         "print resolved settings as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_flags);
        if (sweep_cmd->parsed()) return run_sweep(sweep_flags);
        if (errors_cmd->parsed()) return run_errors(errors_flags);
        if (oracle_cmd->parsed()) return run_oracle(oracle_flags);
    } catch (const UsageError& e) {
        std::cerr << "ocsplit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ocsplit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ocsplit: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
