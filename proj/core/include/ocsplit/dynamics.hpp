#pragma once

#include "ocsplit/problem.hpp"

namespace ocsplit {

/// Forward Euler integration of the double integrator from (s0, v0):
///   x1[i+1] = x1[i] + h * x2[i]
///   x2[i+1] = x2[i] + h * u_i
/// The control is held constant on each cell at its left-endpoint sample.
/// Throws std::invalid_argument if u does not match the grid.
StateTrajectory euler_integrate(const ControlVector& u, const ProblemSpec& spec, const Grid& grid);

/// Terminal state (x1[n], x2[n]) of the same recursion, without storing the path.
struct TerminalState {
    double x1;
    double x2;
};
TerminalState euler_terminal(const ControlVector& u, const ProblemSpec& spec, const Grid& grid);

}  // namespace ocsplit
