#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocsplit/problem.hpp"
#include "ocsplit/projectors.hpp"

namespace ocsplit {

enum class Method {
    Dykstra,
    DouglasRachford,
    AragonArtachoCampoy,
    Alternating,  // plain alternating projections
};

/// BoxFirst runs the box projection before the affine one and monitors the
/// box-feasible iterate; AffineFirst swaps the roles (for Dykstra it only
/// changes which iterate is monitored and returned).
enum class ProjectionOrder {
    BoxFirst,
    AffineFirst,
};

struct SolverConfig {
    Method method = Method::Dykstra;
    ProjectionOrder order = ProjectionOrder::BoxFirst;
    double epsilon = 1e-8;
    long max_iter = 1'000'000;
    double lambda = 0.5;  ///< Douglas-Rachford relaxation, in (0,1)
    double alpha = 1.0;   ///< AAC relaxation, in (0,1]; exactly 1 is accepted (see validate())
    double beta = 0.5;    ///< AAC contraction, in (0,1)
    JacobianMode jacobian = JacobianMode::Continuous;
    bool record_shadow = false;       ///< keep every monitored iterate (for error traces)
    std::optional<ControlVector> initial;  ///< starting control, zeros when absent

    /// Throws std::invalid_argument on out-of-range parameters. alpha == 1 is
    /// allowed although the AAC convergence theory assumes alpha < 1; it
    /// behaves well on this problem class.
    void validate() const;
};

struct SolveReport {
    ControlVector control;  ///< monitored iterate at termination
    long iterations = 0;
    bool converged = false;
    std::vector<double> residuals;       ///< max-norm step of the driver sequence, one per iteration
    std::vector<ControlVector> shadow;   ///< monitored iterate per iteration (when recorded)
    ShootingConstants final_constants;   ///< shooting constants of the last affine projection
    /// Affine costate representation recovered from the fixed point: the
    /// converged control is the clip of -(c1*t + c2). Available for the
    /// box-first Douglas-Rachford and AAC iterations, where the final
    /// projection constants determine it up to a known scale.
    std::optional<ShootingConstants> adjoint;
    /// Last input handed to the box projector (Dykstra box-first); its clip
    /// is the returned control, so it acts as a nonparametric costate estimate.
    std::optional<ControlVector> box_preimage;
};

SolveReport dykstra_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg);
SolveReport dr_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg);
SolveReport aac_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg);
SolveReport map_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg);

/// Dispatch on cfg.method.
SolveReport solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg);

std::string to_string(Method m);
std::string to_string(ProjectionOrder o);
std::string to_string(JacobianMode m);

}  // namespace ocsplit
