#include "ocsplit/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "ocsplit/format.hpp"

namespace ocsplit {

namespace {

SolverConfig cell_config(const SweepResult& result, const SweepCell& cell, ProjectionOrder order) {
    SolverConfig cfg;
    cfg.order = order;
    cfg.epsilon = result.eps;
    cfg.max_iter = result.max_iter;
    if (result.kind == SweepResult::Kind::Lambda) {
        cfg.method = Method::DouglasRachford;
        cfg.lambda = cell.p1;
    } else {
        cfg.method = Method::AragonArtachoCampoy;
        cfg.alpha = cell.p1;
        cfg.beta = cell.p2;
    }
    return cfg;
}

void run_cells(SweepResult& result, const Grid& grid, ProjectionOrder order, std::size_t first,
               int jobs) {
    std::atomic<std::size_t> next{first};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= result.cells.size()) return;
            SweepCell& cell = result.cells[idx];
            ProblemSpec spec = result.spec;
            spec.a = cell.a;
            const SolveReport report = solve(spec, grid, cell_config(result, cell, order));
            cell.converged = report.converged;
            cell.iterations = report.converged ? report.iterations : result.sentinel();
        }
    };

    if (jobs <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(result.cells.size() - first));
    pool.reserve(static_cast<std::size_t>(std::max(count, 1)));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

SweepResult sweep_lambda(const ProblemSpec& spec, const Grid& grid, double eps,
                         const std::vector<double>& a_values,
                         const std::vector<double>& lambda_grid, ProjectionOrder order,
                         long max_iter, int jobs) {
    SweepResult result;
    result.kind = SweepResult::Kind::Lambda;
    result.spec = spec;
    result.n = grid.n();
    result.eps = eps;
    result.max_iter = max_iter;
    result.cells.reserve(a_values.size() * lambda_grid.size());
    for (const double a : a_values) {
        for (const double lambda : lambda_grid) {
            result.cells.push_back({a, lambda, 0.0, 0, false});
        }
    }
    run_cells(result, grid, order, 0, jobs);
    return result;
}

SweepResult sweep_alpha_beta(const ProblemSpec& spec, const Grid& grid, double eps,
                             const std::vector<double>& a_values,
                             const std::vector<double>& alpha_grid,
                             const std::vector<double>& beta_grid, ProjectionOrder order,
                             long max_iter, int jobs) {
    SweepResult result;
    result.kind = SweepResult::Kind::AlphaBeta;
    result.spec = spec;
    result.n = grid.n();
    result.eps = eps;
    result.max_iter = max_iter;
    result.cells.reserve(a_values.size() * alpha_grid.size() * beta_grid.size());
    for (const double a : a_values) {
        for (const double alpha : alpha_grid) {
            for (const double beta : beta_grid) {
                result.cells.push_back({a, alpha, beta, 0, false});
            }
        }
    }
    run_cells(result, grid, order, 0, jobs);
    return result;
}

void refine_minimum(SweepResult& result, const Grid& grid, ProjectionOrder order,
                    int max_levels) {
    std::vector<double> a_values;
    for (const SweepCell& cell : result.cells) {
        if (a_values.empty() || a_values.back() != cell.a) a_values.push_back(cell.a);
    }
    std::sort(a_values.begin(), a_values.end());
    a_values.erase(std::unique(a_values.begin(), a_values.end()), a_values.end());

    auto evaluate = [&](double a, double p1, double p2) {
        SweepCell cell{a, p1, p2, 0, false};
        ProblemSpec spec = result.spec;
        spec.a = a;
        const SolveReport report = solve(spec, grid, cell_config(result, cell, order));
        cell.converged = report.converged;
        cell.iterations = report.converged ? report.iterations : result.sentinel();
        result.cells.push_back(cell);
        return cell.iterations;
    };

    const bool on_beta = result.kind == SweepResult::Kind::AlphaBeta;
    for (const double a : a_values) {
        // converged arg-min cell and its neighbours along the refined axis
        std::size_t best = result.cells.size();
        for (std::size_t i = 0; i < result.cells.size(); ++i) {
            const SweepCell& cell = result.cells[i];
            if (cell.a != a || !cell.converged) continue;
            if (best == result.cells.size() ||
                cell.iterations < result.cells[best].iterations) {
                best = i;
            }
        }
        if (best == result.cells.size()) continue;

        const double alpha = result.cells[best].p1;  // fixed for two-parameter sweeps
        double center = on_beta ? result.cells[best].p2 : result.cells[best].p1;
        long center_count = result.cells[best].iterations;

        // neighbouring grid values on the refined axis bracket the minimum
        double lo = center, hi = center;
        for (const SweepCell& cell : result.cells) {
            if (cell.a != a) continue;
            if (on_beta && cell.p1 != alpha) continue;
            const double v = on_beta ? cell.p2 : cell.p1;
            if (v < center && (lo == center || v > lo)) lo = v;
            if (v > center && (hi == center || v < hi)) hi = v;
        }
        if (lo == center || hi == center) continue;

        for (int level = 0; level < max_levels && hi - lo > 1e-9; ++level) {
            const double ml = 0.5 * (lo + center);
            const double mr = 0.5 * (center + hi);
            const long cl = on_beta ? evaluate(a, alpha, ml) : evaluate(a, ml, 0.0);
            const long cr = on_beta ? evaluate(a, alpha, mr) : evaluate(a, mr, 0.0);
            if (cl <= center_count && cl <= cr) {
                hi = center;
                center = ml;
                center_count = cl;
            } else if (cr <= center_count) {
                lo = center;
                center = mr;
                center_count = cr;
            } else {
                lo = ml;
                hi = mr;
            }
        }
    }

    std::sort(result.cells.begin(), result.cells.end(), [](const SweepCell& l, const SweepCell& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.p1 != r.p1) return l.p1 < r.p1;
        return l.p2 < r.p2;
    });
}

void write_csv(const SweepResult& result, std::ostream& os) {
    const bool two_params = result.kind == SweepResult::Kind::AlphaBeta;
    os << (two_params ? "a,alpha,beta,iterations,converged\n" : "a,lambda,iterations,converged\n");
    for (const SweepCell& cell : result.cells) {
        os << format_double(cell.a) << ',' << format_double(cell.p1);
        if (two_params) os << ',' << format_double(cell.p2);
        os << ',';
        if (cell.converged) os << cell.iterations;
        os << ',' << (cell.converged ? '1' : '0') << '\n';
    }
}

}  // namespace ocsplit
