#include "ocsplit/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "ocsplit/dynamics.hpp"

namespace ocsplit {

namespace {

// Sampling stride of a reference grid over a coarser (or equal) nested grid.
long nested_stride(const Grid& grid, const Grid& ref_grid, const char* what) {
    if (ref_grid.n() < grid.n() || ref_grid.n() % grid.n() != 0) {
        throw std::invalid_argument(std::string(what) + ": reference grid is not a refinement");
    }
    return ref_grid.n() / grid.n();
}

}  // namespace

double control_error(const ControlVector& u, const Grid& grid, const ControlVector& ref,
                     const Grid& ref_grid) {
    if (u.size() != static_cast<std::size_t>(grid.n()) ||
        ref.size() != static_cast<std::size_t>(ref_grid.n())) {
        throw std::invalid_argument("control_error: length mismatch");
    }
    const long stride = nested_stride(grid, ref_grid, "control_error");
    double worst = 0.0;
    for (long i = 0; i < grid.n(); ++i) {
        worst = std::max(worst, std::abs(u[static_cast<std::size_t>(i)] -
                                         ref[static_cast<std::size_t>(i * stride)]));
    }
    return worst;
}

double state_error(const StateTrajectory& x, const Grid& grid, const StateTrajectory& ref,
                   const Grid& ref_grid) {
    if (x.x1.size() != static_cast<std::size_t>(grid.n()) + 1 || x.x2.size() != x.x1.size() ||
        ref.x1.size() != static_cast<std::size_t>(ref_grid.n()) + 1 ||
        ref.x2.size() != ref.x1.size()) {
        throw std::invalid_argument("state_error: length mismatch");
    }
    const long stride = nested_stride(grid, ref_grid, "state_error");
    double worst = 0.0;
    for (long i = 0; i <= grid.n(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto r = static_cast<std::size_t>(i * stride);
        const double d1 = std::abs(x.x1[k] - ref.x1[r]);
        const double d2 = std::abs(x.x2[k] - ref.x2[r]);
        worst = std::max(worst, std::max(d1, d2));
    }
    return worst;
}

ErrorTrace error_trace(const SolveReport& report, const ProblemSpec& spec, const Grid& grid,
                       const ControlVector& ref_u, const StateTrajectory& ref_x,
                       const Grid& ref_grid) {
    if (report.shadow.empty()) {
        throw std::invalid_argument("error_trace: report has no recorded shadow iterates");
    }
    ErrorTrace trace;
    trace.sigma_u.reserve(report.shadow.size());
    trace.sigma_x.reserve(report.shadow.size());
    for (const ControlVector& uk : report.shadow) {
        trace.sigma_u.push_back(control_error(uk, grid, ref_u, ref_grid));
        const StateTrajectory xk = euler_integrate(uk, spec, grid);
        trace.sigma_x.push_back(state_error(xk, grid, ref_x, ref_grid));
    }
    return trace;
}

}  // namespace ocsplit
