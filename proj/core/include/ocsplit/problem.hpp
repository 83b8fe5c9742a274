#pragma once

#include <cstddef>
#include <vector>

namespace ocsplit {

/// Boundary conditions and control bound of one minimum-energy
/// double-integrator instance on the unit time horizon.
struct ProblemSpec {
    double s0 = 0.0;  ///< position at t = 0
    double sf = 0.0;  ///< position at t = 1
    double v0 = 0.0;  ///< velocity at t = 0
    double vf = 0.0;  ///< velocity at t = 1
    double a = 1.0;   ///< control magnitude bound, a > 0

    /// Throws std::invalid_argument unless a > 0 and all values are finite.
    void validate() const;
};

/// Uniform partition of [0,1] into n subintervals of width h = 1/n.
class Grid {
public:
    explicit Grid(long n);

    long n() const { return n_; }
    double h() const { return h_; }
    double node(long i) const { return static_cast<double>(i) * h_; }

private:
    long n_;
    double h_;
};

/// Discrete control signal: n samples attached to the left endpoints
/// t_0, ..., t_{n-1} of the grid cells.
struct ControlVector {
    std::vector<double> samples;

    ControlVector() = default;
    explicit ControlVector(std::vector<double> s) : samples(std::move(s)) {}

    static ControlVector zeros(std::size_t n) { return ControlVector(std::vector<double>(n, 0.0)); }
    static ControlVector constant(std::size_t n, double value) {
        return ControlVector(std::vector<double>(n, value));
    }

    std::size_t size() const { return samples.size(); }
    double operator[](std::size_t i) const { return samples[i]; }
    double& operator[](std::size_t i) { return samples[i]; }
};

/// Discrete state path: position and velocity on all n+1 grid nodes.
struct StateTrajectory {
    std::vector<double> x1;
    std::vector<double> x2;
};

/// Max-norm distance between two equally long controls.
/// Throws std::invalid_argument on length mismatch.
double linf_dist(const ControlVector& u, const ControlVector& v);

/// Discrete L2 norm via left-endpoint quadrature: sqrt(h * sum u_i^2).
/// Throws std::invalid_argument if u does not match the grid.
double l2_norm(const ControlVector& u, const Grid& grid);

/// Discrete L2 inner product with the same quadrature weight.
double l2_inner(const ControlVector& u, const ControlVector& v, const Grid& grid);

}  // namespace ocsplit
