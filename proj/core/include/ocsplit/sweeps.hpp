#pragma once

#include <iosfwd>
#include <vector>

#include "ocsplit/problem.hpp"
#include "ocsplit/solvers.hpp"

namespace ocsplit {

struct SweepCell {
    double a = 0.0;
    double p1 = 0.0;  ///< lambda, or alpha for two-parameter sweeps
    double p2 = 0.0;  ///< beta (unused for lambda sweeps)
    long iterations = 0;  ///< max_iter + 1 sentinel when not converged
    bool converged = false;
};

struct SweepResult {
    enum class Kind { Lambda, AlphaBeta };

    Kind kind = Kind::Lambda;
    ProblemSpec spec;
    long n = 0;
    double eps = 0.0;
    long max_iter = 0;
    std::vector<SweepCell> cells;  ///< ordered by (a, p1, p2)

    long sentinel() const { return max_iter + 1; }
};

/// One dr_solve per (a, lambda) cell. Cells are independent and evaluated by
/// `jobs` worker threads; the result is grid-ordered regardless of scheduling.
SweepResult sweep_lambda(const ProblemSpec& spec, const Grid& grid, double eps,
                         const std::vector<double>& a_values,
                         const std::vector<double>& lambda_grid, ProjectionOrder order,
                         long max_iter = 1'000'000, int jobs = 1);

/// One aac_solve per (a, alpha, beta) cell.
SweepResult sweep_alpha_beta(const ProblemSpec& spec, const Grid& grid, double eps,
                             const std::vector<double>& a_values,
                             const std::vector<double>& alpha_grid,
                             const std::vector<double>& beta_grid, ProjectionOrder order,
                             long max_iter = 1'000'000, int jobs = 1);

/// Local bisection refinement around each a-value's converged arg-min cell:
/// repeatedly samples the midpoints of the bracketing interval and keeps the
/// best triple, appending every probed cell. Cells stay (a, p1, p2)-sorted.
/// For two-parameter sweeps the refinement moves beta at the arg-min alpha.
void refine_minimum(SweepResult& result, const Grid& grid, ProjectionOrder order,
                    int max_levels = 30);

/// CSV with header `a,lambda,iterations,converged` or
/// `a,alpha,beta,iterations,converged`; non-converged cells leave the
/// iterations field empty; LF line endings.
void write_csv(const SweepResult& result, std::ostream& os);

}  // namespace ocsplit
