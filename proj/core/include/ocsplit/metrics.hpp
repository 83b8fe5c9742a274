#pragma once

#include "ocsplit/problem.hpp"
#include "ocsplit/solvers.hpp"

namespace ocsplit {

/// Max nodal deviation of a control from a reference living on a grid whose
/// size is an integer multiple of the control's grid size. Only coincident
/// nodes are compared; nothing is interpolated.
/// Throws std::invalid_argument when the grids do not nest.
double control_error(const ControlVector& u, const Grid& grid, const ControlVector& ref,
                     const Grid& ref_grid);

/// Same for state paths, with the componentwise max over (x1, x2) per node.
double state_error(const StateTrajectory& x, const Grid& grid, const StateTrajectory& ref,
                   const Grid& ref_grid);

/// Per-iteration control and state errors of a recorded solve.
struct ErrorTrace {
    std::vector<double> sigma_u;
    std::vector<double> sigma_x;
};

/// Requires report.shadow to be populated (record_shadow). States are
/// rebuilt from each shadow control with euler_integrate.
ErrorTrace error_trace(const SolveReport& report, const ProblemSpec& spec, const Grid& grid,
                       const ControlVector& ref_u, const StateTrajectory& ref_x,
                       const Grid& ref_grid);

}  // namespace ocsplit
