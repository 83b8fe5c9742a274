#include "ocsplit/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace ocsplit {

void SolverConfig::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("SolverConfig: epsilon must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("SolverConfig: max_iter must be positive");
    }
    if (method == Method::DouglasRachford && !(lambda > 0.0 && lambda < 1.0)) {
        throw std::invalid_argument("SolverConfig: lambda must lie in (0,1)");
    }
    if (method == Method::AragonArtachoCampoy) {
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw std::invalid_argument("SolverConfig: alpha must lie in (0,1]");
        }
        if (!(beta > 0.0 && beta < 1.0)) {
            throw std::invalid_argument("SolverConfig: beta must lie in (0,1)");
        }
    }
}

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

ControlVector starting_control(const ProblemSpec& spec, const Grid& grid,
                               const SolverConfig& cfg) {
    spec.validate();
    cfg.validate();
    const auto n = static_cast<std::size_t>(grid.n());
    if (cfg.initial) {
        if (cfg.initial->size() != n) {
            throw std::invalid_argument("solve: initial control length does not match grid");
        }
        return *cfg.initial;
    }
    return ControlVector::zeros(n);
}

void record(SolveReport& report, const SolverConfig& cfg, const ControlVector& monitored,
            double residual) {
    report.residuals.push_back(residual);
    if (cfg.record_shadow) {
        report.shadow.push_back(monitored);
    }
}

void finish(SolveReport& report, const ControlVector& monitored, long passes, bool converged) {
    report.control = monitored;
    report.iterations = passes;
    report.converged = converged;
}

}  // namespace

SolveReport dykstra_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg) {
    ControlVector u = starting_control(spec, grid, cfg);
    ControlVector q = ControlVector::zeros(u.size());
    AffineProjector affine(spec, grid, cfg.jacobian);

    ControlVector w, utilde, uhat;
    SolveReport report;
    const bool monitor_box = cfg.order == ProjectionOrder::BoxFirst;

    for (long k = 0; k < cfg.max_iter; ++k) {
        w.samples.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + q[i];
        project_box_into(w, spec.a, utilde);
        report.final_constants = affine.apply(utilde, uhat);
        for (std::size_t i = 0; i < u.size(); ++i) q[i] = w[i] - utilde[i];

        const double residual = max_abs_diff(uhat.samples, u.samples);
        const ControlVector& monitored = monitor_box ? utilde : uhat;
        record(report, cfg, monitored, residual);
        u = uhat;
        if (residual <= cfg.epsilon) {
            finish(report, monitored, k + 1, true);
            if (monitor_box) report.box_preimage = w;
            return report;
        }
    }
    finish(report, monitor_box ? utilde : uhat, cfg.max_iter, false);
    if (monitor_box) report.box_preimage = w;
    return report;
}

SolveReport dr_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg) {
    ControlVector x = starting_control(spec, grid, cfg);
    AffineProjector affine(spec, grid, cfg.jacobian);

    ControlVector scaled, utilde, reflected, uhat, xnew;
    SolveReport report;
    const double lambda = cfg.lambda;

    for (long k = 0; k < cfg.max_iter; ++k) {
        scaled.samples.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = lambda * x[i];

        if (cfg.order == ProjectionOrder::BoxFirst) {
            project_box_into(scaled, spec.a, utilde);
        } else {
            report.final_constants = affine.apply(scaled, utilde);
        }

        reflected.samples.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) reflected[i] = 2.0 * utilde[i] - x[i];

        if (cfg.order == ProjectionOrder::BoxFirst) {
            report.final_constants = affine.apply(reflected, uhat);
        } else {
            project_box_into(reflected, spec.a, uhat);
        }

        xnew.samples.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xnew[i] = x[i] + uhat[i] - utilde[i];

        const double residual = max_abs_diff(xnew.samples, x.samples);
        record(report, cfg, utilde, residual);
        x = xnew;
        if (residual <= cfg.epsilon) {
            finish(report, utilde, k + 1, true);
            if (cfg.order == ProjectionOrder::BoxFirst) {
                // At the fixed point the last affine correction is
                // ((1-lambda)/lambda) times the affine costate representation.
                report.adjoint = ShootingConstants{
                    report.final_constants.c1 * lambda / (1.0 - lambda),
                    report.final_constants.c2 * lambda / (1.0 - lambda)};
            }
            return report;
        }
    }
    finish(report, utilde, cfg.max_iter, false);
    return report;
}

SolveReport aac_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg) {
    ControlVector x = starting_control(spec, grid, cfg);
    AffineProjector affine(spec, grid, cfg.jacobian);

    ControlVector utilde, reflected, uhat, xnew;
    SolveReport report;
    const double alpha = cfg.alpha;
    const double beta = cfg.beta;

    for (long k = 0; k < cfg.max_iter; ++k) {
        if (cfg.order == ProjectionOrder::BoxFirst) {
            project_box_into(x, spec.a, utilde);
        } else {
            report.final_constants = affine.apply(x, utilde);
        }

        reflected.samples.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) reflected[i] = 2.0 * beta * utilde[i] - x[i];

        if (cfg.order == ProjectionOrder::BoxFirst) {
            report.final_constants = affine.apply(reflected, uhat);
        } else {
            project_box_into(reflected, spec.a, uhat);
        }

        xnew.samples.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            xnew[i] = x[i] + 2.0 * alpha * beta * (uhat[i] - utilde[i]);
        }

        const double residual = max_abs_diff(xnew.samples, x.samples);
        record(report, cfg, utilde, residual);
        x = xnew;
        if (residual <= cfg.epsilon) {
            finish(report, utilde, k + 1, true);
            if (cfg.order == ProjectionOrder::BoxFirst) {
                // Fixed-point scale: the last affine correction is
                // 2(1-beta) times the affine costate representation.
                report.adjoint = ShootingConstants{
                    report.final_constants.c1 / (2.0 * (1.0 - beta)),
                    report.final_constants.c2 / (2.0 * (1.0 - beta))};
            }
            return report;
        }
    }
    finish(report, utilde, cfg.max_iter, false);
    return report;
}

SolveReport map_solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg) {
    ControlVector x = starting_control(spec, grid, cfg);
    AffineProjector affine(spec, grid, cfg.jacobian);

    ControlVector utilde, xnew;
    SolveReport report;

    for (long k = 0; k < cfg.max_iter; ++k) {
        if (cfg.order == ProjectionOrder::BoxFirst) {
            project_box_into(x, spec.a, utilde);
            report.final_constants = affine.apply(utilde, xnew);
        } else {
            report.final_constants = affine.apply(x, utilde);
            project_box_into(utilde, spec.a, xnew);
        }

        const double residual = max_abs_diff(xnew.samples, x.samples);
        record(report, cfg, utilde, residual);
        x = xnew;
        if (residual <= cfg.epsilon) {
            finish(report, utilde, k + 1, true);
            return report;
        }
    }
    finish(report, utilde, cfg.max_iter, false);
    return report;
}

SolveReport solve(const ProblemSpec& spec, const Grid& grid, const SolverConfig& cfg) {
    switch (cfg.method) {
        case Method::Dykstra:
            return dykstra_solve(spec, grid, cfg);
        case Method::DouglasRachford:
            return dr_solve(spec, grid, cfg);
        case Method::AragonArtachoCampoy:
            return aac_solve(spec, grid, cfg);
        case Method::Alternating:
            return map_solve(spec, grid, cfg);
    }
    throw std::logic_error("solve: unknown method");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Dykstra: return "dykstra";
        case Method::DouglasRachford: return "dr";
        case Method::AragonArtachoCampoy: return "aac";
        case Method::Alternating: return "map";
    }
    return "?";
}

std::string to_string(ProjectionOrder o) {
    return o == ProjectionOrder::BoxFirst ? "box-first" : "affine-first";
}

std::string to_string(JacobianMode m) {
    return m == JacobianMode::Continuous ? "paper" : "exact";
}

}  // namespace ocsplit
