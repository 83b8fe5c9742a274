#include "ocsplit/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ocsplit/dynamics.hpp"
#include "ocsplit/format.hpp"

namespace ocsplit {

UnconstrainedSolution unconstrained_solution(const ProblemSpec& spec, const Grid& grid) {
    spec.validate();
    UnconstrainedSolution sol;
    sol.c1 = -12.0 * (spec.sf - spec.s0) + 6.0 * (spec.v0 + spec.vf);
    sol.c2 = 6.0 * (spec.sf - spec.s0) - 2.0 * (2.0 * spec.v0 + spec.vf);

    const long n = grid.n();
    sol.control.samples.resize(static_cast<std::size_t>(n));
    sol.trajectory.x1.resize(static_cast<std::size_t>(n) + 1);
    sol.trajectory.x2.resize(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        const double t = grid.node(i);
        if (i < n) {
            sol.control[static_cast<std::size_t>(i)] = sol.c1 * t + sol.c2;
        }
        sol.trajectory.x1[static_cast<std::size_t>(i)] =
            sol.c1 * t * t * t / 6.0 + sol.c2 * t * t / 2.0 + spec.v0 * t + spec.s0;
        sol.trajectory.x2[static_cast<std::size_t>(i)] =
            sol.c1 * t * t / 2.0 + sol.c2 * t + spec.v0;
    }
    return sol;
}

namespace {

inline void kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

// Terminal miss of the clipped-affine control clip(c1*t + c2, +-a) under the
// forward Euler recursion. Compensated summation keeps the evaluation
// accurate near machine precision even at n = 1e6, which the tight oracle
// tolerances need.
std::array<double, 2> clipped_miss(double c1, double c2, const ProblemSpec& spec,
                                   const Grid& grid) {
    const double h = grid.h();
    const long n = grid.n();
    double x1 = spec.s0, e1 = 0.0;
    double x2 = spec.v0, e2 = 0.0;
    for (long i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * h;
        const double u = std::min(spec.a, std::max(-spec.a, c1 * t + c2));
        kahan_add(x1, e1, h * x2);
        kahan_add(x2, e2, h * u);
    }
    return {x1 - spec.sf, x2 - spec.vf};
}

inline double miss_norm(const std::array<double, 2>& phi) {
    return std::max(std::abs(phi[0]), std::abs(phi[1]));
}

struct NewtonOutcome {
    bool converged = false;
    double c1 = 0.0;
    double c2 = 0.0;
};

NewtonOutcome newton_from(double c1, double c2, const ProblemSpec& spec, const Grid& grid,
                          double tol, int max_steps) {
    for (int step = 0; step < max_steps; ++step) {
        const auto phi = clipped_miss(c1, c2, spec, grid);
        const double n0 = miss_norm(phi);
        if (n0 <= tol) {
            return {true, c1, c2};
        }

        // central finite-difference Jacobian
        const double d1 = 1e-6 * std::max(1.0, std::abs(c1));
        const double d2 = 1e-6 * std::max(1.0, std::abs(c2));
        const auto fp1 = clipped_miss(c1 + d1, c2, spec, grid);
        const auto fm1 = clipped_miss(c1 - d1, c2, spec, grid);
        const auto fp2 = clipped_miss(c1, c2 + d2, spec, grid);
        const auto fm2 = clipped_miss(c1, c2 - d2, spec, grid);
        const double j11 = (fp1[0] - fm1[0]) / (2.0 * d1);
        const double j21 = (fp1[1] - fm1[1]) / (2.0 * d1);
        const double j12 = (fp2[0] - fm2[0]) / (2.0 * d2);
        const double j22 = (fp2[1] - fm2[1]) / (2.0 * d2);

        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-14) {
            return {false, c1, c2};  // fully clipped region, no descent direction
        }
        const double s1 = -(j22 * phi[0] - j12 * phi[1]) / det;
        const double s2 = -(-j21 * phi[0] + j11 * phi[1]) / det;

        // halve the step until the miss norm decreases
        double scale = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 30; ++halving) {
            const double t1 = c1 + scale * s1;
            const double t2 = c2 + scale * s2;
            if (miss_norm(clipped_miss(t1, t2, spec, grid)) < n0) {
                c1 = t1;
                c2 = t2;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (!accepted) {
            return {false, c1, c2};
        }
    }
    return {false, c1, c2};
}

}  // namespace

OracleSolution oracle_solve(const ProblemSpec& spec, const Grid& grid, double tol) {
    spec.validate();
    if (!(tol > 0.0)) {
        throw std::invalid_argument("oracle_solve: tol must be positive");
    }

    const UnconstrainedSolution unconstrained = unconstrained_solution(spec, grid);
    NewtonOutcome best{false, unconstrained.c1, unconstrained.c2};

    best = newton_from(unconstrained.c1, unconstrained.c2, spec, grid, tol, 200);
    if (!best.converged) {
        for (int i = -5; i <= 5 && !best.converged; ++i) {
            for (int j = -5; j <= 5 && !best.converged; ++j) {
                best = newton_from(10.0 * i, 10.0 * j, spec, grid, tol, 200);
            }
        }
    }

    OracleSolution sol;
    sol.c1 = best.c1;
    sol.c2 = best.c2;
    sol.feasible = best.converged;
    const auto n = static_cast<std::size_t>(grid.n());
    sol.control.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.node(static_cast<long>(i));
        sol.control[i] = std::min(spec.a, std::max(-spec.a, sol.c1 * t + sol.c2));
    }
    sol.trajectory = euler_integrate(sol.control, spec, grid);
    return sol;
}

void save_reference(const ReferenceSolution& ref, const std::string& path) {
    nlohmann::ordered_json header;
    header["s0"] = ref.spec.s0;
    header["sf"] = ref.spec.sf;
    header["v0"] = ref.spec.v0;
    header["vf"] = ref.spec.vf;
    header["a"] = ref.spec.a;
    header["n"] = ref.n;
    header["tol"] = ref.tol;
    header["c1"] = ref.c1;
    header["c2"] = ref.c2;
    header["feasible"] = ref.feasible;

    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("save_reference: cannot open " + path);
    }
    os << header.dump() << '\n';
    os.write(reinterpret_cast<const char*>(ref.control.samples.data()),
             static_cast<std::streamsize>(ref.control.size() * sizeof(double)));
    if (!os) {
        throw std::runtime_error("save_reference: write failed for " + path);
    }
}

ReferenceSolution load_reference(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("load_reference: cannot open " + path);
    }
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("load_reference: missing header in " + path);
    }
    const nlohmann::json header = nlohmann::json::parse(line);

    ReferenceSolution ref;
    ref.spec.s0 = header.at("s0").get<double>();
    ref.spec.sf = header.at("sf").get<double>();
    ref.spec.v0 = header.at("v0").get<double>();
    ref.spec.vf = header.at("vf").get<double>();
    ref.spec.a = header.at("a").get<double>();
    ref.n = header.at("n").get<long>();
    ref.tol = header.at("tol").get<double>();
    ref.c1 = header.at("c1").get<double>();
    ref.c2 = header.at("c2").get<double>();
    ref.feasible = header.at("feasible").get<bool>();

    ref.control.samples.resize(static_cast<std::size_t>(ref.n));
    is.read(reinterpret_cast<char*>(ref.control.samples.data()),
            static_cast<std::streamsize>(ref.control.size() * sizeof(double)));
    if (is.gcount() != static_cast<std::streamsize>(ref.control.size() * sizeof(double))) {
        throw std::runtime_error("load_reference: truncated sample block in " + path);
    }
    return ref;
}

std::string reference_cache_name(const ProblemSpec& spec, long n, double tol) {
    // FNV-1a over the exact serialized key, stable across runs and builds
    const std::string key = format_double(spec.s0) + "," + format_double(spec.sf) + "," +
                            format_double(spec.v0) + "," + format_double(spec.vf) + "," +
                            format_double(spec.a) + "," + std::to_string(n) + "," +
                            format_double(tol);
    std::uint64_t hash = 1469598103934665603ull;
    for (const char ch : key) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("ref-") + buf + ".bin";
}

ReferenceSolution ensure_reference(const ProblemSpec& spec, long n, double tol,
                                   const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const std::string path = (fs::path(dir) / reference_cache_name(spec, n, tol)).string();
    if (fs::exists(path)) {
        ReferenceSolution cached = load_reference(path);
        if (cached.n == n) {
            return cached;
        }
    }

    const Grid grid(n);
    const OracleSolution oracle = oracle_solve(spec, grid, tol);
    if (!oracle.feasible) {
        throw std::runtime_error("ensure_reference: oracle did not converge; instance infeasible?");
    }
    ReferenceSolution ref;
    ref.spec = spec;
    ref.n = n;
    ref.tol = tol;
    ref.c1 = oracle.c1;
    ref.c2 = oracle.c2;
    ref.feasible = true;
    ref.control = oracle.control;
    save_reference(ref, path);
    return ref;
}

}  // namespace ocsplit
