#include "ocsplit/projectors.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ocsplit {

TerminalMiss near_miss(const ShootingConstants& c, const ControlVector& u, const ProblemSpec& spec,
                       const Grid& grid) {
    const auto n = static_cast<std::size_t>(grid.n());
    if (u.size() != n) {
        throw std::invalid_argument("near_miss: control length does not match grid");
    }
    const double h = grid.h();
    double x1 = spec.s0;
    double x2 = spec.v0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * h;
        x1 += h * x2;
        x2 += h * (u[i] + c.c1 * t + c.c2);
    }
    return {x1 - spec.sf, x2 - spec.vf};
}

AffineProjector::AffineProjector(const ProblemSpec& spec, const Grid& grid, JacobianMode mode)
    : spec_(spec), grid_(grid), mode_(mode) {
    if (grid.n() < 2) {
        throw std::invalid_argument("AffineProjector: need n >= 2 for a nonsingular shooting system");
    }
    if (mode_ == JacobianMode::ExactDiscrete) {
        // Euler integration of the four variational recursions for the
        // terminal sensitivities with respect to c1 and c2.
        const double h = grid_.h();
        double s11 = 0.0, s12 = 0.0, s21 = 0.0, s22 = 0.0;
        for (long i = 0; i < grid_.n(); ++i) {
            const double t = static_cast<double>(i) * h;
            const double ns11 = s11 + h * s21;
            const double ns12 = s12 + h * s22;
            s21 += h * t;
            s22 += h;
            s11 = ns11;
            s12 = ns12;
        }
        jac_[0] = s11;
        jac_[1] = s12;
        jac_[2] = s21;
        jac_[3] = s22;
    } else {
        // Continuous-time terminal sensitivity [t^3/6 t^2/2; t^2/2 t] at t = 1.
        jac_[0] = 1.0 / 6.0;
        jac_[1] = 0.5;
        jac_[2] = 0.5;
        jac_[3] = 1.0;
    }
}

TerminalMiss AffineProjector::terminal_miss(const ControlVector& u) const {
    const TerminalState end = euler_terminal(u, spec_, grid_);
    return {end.x1 - spec_.sf, end.x2 - spec_.vf};
}

ShootingConstants AffineProjector::apply(const ControlVector& u_in, ControlVector& u_out) const {
    const TerminalMiss phi = terminal_miss(u_in);

    ShootingConstants c;
    if (mode_ == JacobianMode::Continuous) {
        c.c1 = 12.0 * phi.position - 6.0 * phi.velocity;
        c.c2 = -6.0 * phi.position + 2.0 * phi.velocity;
    } else {
        const double det = jac_[0] * jac_[3] - jac_[1] * jac_[2];
        assert(det != 0.0);
        if (det == 0.0) {
            throw std::logic_error("AffineProjector: singular shooting system");
        }
        // c = -J^{-1} phi
        c.c1 = -(jac_[3] * phi.position - jac_[1] * phi.velocity) / det;
        c.c2 = -(-jac_[2] * phi.position + jac_[0] * phi.velocity) / det;
    }

    const auto n = u_in.size();
    u_out.samples.resize(n);
    const double h = grid_.h();
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * h;
        u_out[i] = u_in[i] + c.c1 * t + c.c2;
    }
    return c;
}

AffineProjection project_affine(const ControlVector& u_minus, const ProblemSpec& spec,
                                const Grid& grid, JacobianMode mode) {
    AffineProjector projector(spec, grid, mode);
    AffineProjection result;
    result.constants = projector.apply(u_minus, result.control);
    return result;
}

void project_box_into(const ControlVector& u_minus, double bound, ControlVector& out) {
    if (!(bound > 0.0)) {
        throw std::invalid_argument("project_box: bound must be positive");
    }
    out.samples.resize(u_minus.size());
    for (std::size_t i = 0; i < u_minus.size(); ++i) {
        out[i] = std::min(bound, std::max(-bound, u_minus[i]));
    }
}

ControlVector project_box(const ControlVector& u_minus, double bound) {
    ControlVector out;
    project_box_into(u_minus, bound, out);
    return out;
}

}  // namespace ocsplit
