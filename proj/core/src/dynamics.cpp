#include "ocsplit/dynamics.hpp"

#include <stdexcept>

namespace ocsplit {

StateTrajectory euler_integrate(const ControlVector& u, const ProblemSpec& spec,
                                const Grid& grid) {
    const auto n = static_cast<std::size_t>(grid.n());
    if (u.size() != n) {
        throw std::invalid_argument("euler_integrate: control length does not match grid");
    }
    const double h = grid.h();
    StateTrajectory traj;
    traj.x1.resize(n + 1);
    traj.x2.resize(n + 1);
    traj.x1[0] = spec.s0;
    traj.x2[0] = spec.v0;
    for (std::size_t i = 0; i < n; ++i) {
        traj.x1[i + 1] = traj.x1[i] + h * traj.x2[i];
        traj.x2[i + 1] = traj.x2[i] + h * u[i];
    }
    return traj;
}

TerminalState euler_terminal(const ControlVector& u, const ProblemSpec& spec, const Grid& grid) {
    const auto n = static_cast<std::size_t>(grid.n());
    if (u.size() != n) {
        throw std::invalid_argument("euler_terminal: control length does not match grid");
    }
    const double h = grid.h();
    double x1 = spec.s0;
    double x2 = spec.v0;
    for (std::size_t i = 0; i < n; ++i) {
        x1 += h * x2;
        x2 += h * u[i];
    }
    return {x1, x2};
}

}  // namespace ocsplit
