#include "ocsplit/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace ocsplit {

void ProblemSpec::validate() const {
    if (!(a > 0.0)) {
        throw std::invalid_argument("ProblemSpec: control bound a must be positive");
    }
    if (!std::isfinite(s0) || !std::isfinite(sf) || !std::isfinite(v0) || !std::isfinite(vf) ||
        !std::isfinite(a)) {
        throw std::invalid_argument("ProblemSpec: boundary values must be finite");
    }
}

Grid::Grid(long n) : n_(n), h_(1.0 / static_cast<double>(n)) {
    if (n < 1) {
        throw std::invalid_argument("Grid: need at least one subinterval");
    }
}

static void require_same_length(std::size_t lhs, std::size_t rhs, const char* what) {
    if (lhs != rhs) {
        throw std::invalid_argument(std::string(what) + ": length mismatch");
    }
}

double linf_dist(const ControlVector& u, const ControlVector& v) {
    require_same_length(u.size(), v.size(), "linf_dist");
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        worst = std::max(worst, std::abs(u[i] - v[i]));
    }
    return worst;
}

double l2_norm(const ControlVector& u, const Grid& grid) {
    require_same_length(u.size(), static_cast<std::size_t>(grid.n()), "l2_norm");
    double acc = 0.0;
    for (double ui : u.samples) acc += ui * ui;
    return std::sqrt(grid.h() * acc);
}

double l2_inner(const ControlVector& u, const ControlVector& v, const Grid& grid) {
    require_same_length(u.size(), v.size(), "l2_inner");
    require_same_length(u.size(), static_cast<std::size_t>(grid.n()), "l2_inner");
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return grid.h() * acc;
}

}  // namespace ocsplit
