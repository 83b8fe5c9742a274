#pragma once

#include <iosfwd>
#include <string>

#include "ocsplit/problem.hpp"

namespace ocsplit {

/// Closed-form solution of the instance without the control bound:
/// u(t) = c1*t + c2 with
///   c1 = -12 (sf - s0) + 6 (v0 + vf)
///   c2 =   6 (sf - s0) - 2 (2 v0 + vf)
/// states x1(t) = c1 t^3/6 + c2 t^2/2 + v0 t + s0, x2(t) = c1 t^2/2 + c2 t + v0.
struct UnconstrainedSolution {
    double c1 = 0.0;
    double c2 = 0.0;
    ControlVector control;      ///< sampled at the n left endpoints
    StateTrajectory trajectory; ///< sampled at all n+1 nodes
};

UnconstrainedSolution unconstrained_solution(const ProblemSpec& spec, const Grid& grid);

/// Ground-truth solution of the bounded instance: the optimal control is the
/// clip of an affine function of t, so it is found by a damped 2-D Newton
/// search on (c1, c2) driving the Euler terminal miss of
/// u_i = clip(c1*t_i + c2, -a, a) below tol.
struct OracleSolution {
    double c1 = 0.0;
    double c2 = 0.0;
    ControlVector control;
    StateTrajectory trajectory;
    bool feasible = false;
};

/// tol must be positive. Infeasibility is reported through the flag, never thrown.
/// Deterministic: fixed multi-start order (unconstrained constants first, then
/// a coarse lattice over [-50,50]^2).
OracleSolution oracle_solve(const ProblemSpec& spec, const Grid& grid, double tol);

/// Reference solution cache: one oracle run frozen to disk so repeated error
/// studies do not pay for the fine-grid Newton solve again.
///
/// File layout: one JSON header line (spec, n, tol, c1, c2, feasible)
/// terminated by '\n', followed by n little-endian IEEE-754 doubles holding
/// the control samples.
struct ReferenceSolution {
    ProblemSpec spec;
    long n = 0;
    double tol = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    bool feasible = false;
    ControlVector control;
};

void save_reference(const ReferenceSolution& ref, const std::string& path);
ReferenceSolution load_reference(const std::string& path);

/// Stable cache file name keyed by (spec, n, tol).
std::string reference_cache_name(const ProblemSpec& spec, long n, double tol);

/// Loads the cached reference if present, otherwise runs the oracle and saves
/// it. `dir` is created when missing.
ReferenceSolution ensure_reference(const ProblemSpec& spec, long n, double tol,
                                   const std::string& dir);

}  // namespace ocsplit
