#pragma once

#include "ocsplit/dynamics.hpp"
#include "ocsplit/problem.hpp"

namespace ocsplit {

/// Coefficients of the affine correction c1*t + c2 added by the projection
/// onto the dynamics constraint set.
struct ShootingConstants {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Which inverse Jacobian the single-shot shooting step uses.
///
/// Continuous: the closed-form inverse [-12 6; 6 -2] of the continuous-time
/// sensitivity, applied to Euler terminal states. ExactDiscrete: the 2x2
/// system assembled from the exact Euler sensitivities, which makes the
/// discrete operator a true orthogonal projection onto the discrete
/// constraint set (idempotent to machine precision).
enum class JacobianMode {
    Continuous,
    ExactDiscrete,
};

/// Terminal boundary-condition residual (x1[n] - sf, x2[n] - vf).
struct TerminalMiss {
    double position = 0.0;
    double velocity = 0.0;
};

/// Integrates u_i + c1*t_i + c2 and returns the terminal miss.
TerminalMiss near_miss(const ShootingConstants& c, const ControlVector& u, const ProblemSpec& spec,
                       const Grid& grid);

/// Projection onto the affine set of controls whose Euler trajectory meets
/// the boundary conditions. Precomputes the grid nodes and the shooting
/// Jacobian once, so it can be applied repeatedly inside solver loops.
class AffineProjector {
public:
    AffineProjector(const ProblemSpec& spec, const Grid& grid,
                    JacobianMode mode = JacobianMode::Continuous);

    /// Writes u_in + c1*t + c2 into u_out (aliasing allowed) and returns c.
    ShootingConstants apply(const ControlVector& u_in, ControlVector& u_out) const;

    TerminalMiss terminal_miss(const ControlVector& u) const;

    const Grid& grid() const { return grid_; }
    JacobianMode mode() const { return mode_; }

private:
    ProblemSpec spec_;
    Grid grid_;
    JacobianMode mode_;
    // row-major terminal sensitivity [d x1/d c1, d x1/d c2; d x2/d c1, d x2/d c2]
    double jac_[4];
};

struct AffineProjection {
    ControlVector control;
    ShootingConstants constants;
};

/// One-shot wrapper around AffineProjector.
AffineProjection project_affine(const ControlVector& u_minus, const ProblemSpec& spec,
                                const Grid& grid, JacobianMode mode = JacobianMode::Continuous);

/// Componentwise clip of u_minus to [-bound, bound].
/// Throws std::invalid_argument unless bound > 0.
ControlVector project_box(const ControlVector& u_minus, double bound);

/// In-place variant used by the solver loops; `out` is resized as needed.
void project_box_into(const ControlVector& u_minus, double bound, ControlVector& out);

}  // namespace ocsplit
