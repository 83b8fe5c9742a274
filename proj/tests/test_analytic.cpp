#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "ocsplit/analytic.hpp"
#include "ocsplit/projectors.hpp"

using namespace ocsplit;

namespace {
const ProblemSpec kBench{0.0, 0.0, 1.0, 0.0, 2.5};
}

TEST_CASE("unconstrained closed form") {
    const Grid grid(2000);
    const UnconstrainedSolution sol = unconstrained_solution(kBench, grid);
    CHECK(sol.c1 == 6.0);
    CHECK(sol.c2 == -4.0);
    for (long i : {0L, 777L, 1999L}) {
        const double t = grid.node(i);
        CHECK(sol.control[static_cast<std::size_t>(i)] ==
              doctest::Approx(6.0 * t - 4.0).epsilon(1e-14));
    }
    // sampled closed form meets the boundary conditions identically
    CHECK(sol.trajectory.x1.front() == kBench.s0);
    CHECK(sol.trajectory.x2.front() == kBench.v0);
    CHECK(sol.trajectory.x1.back() == doctest::Approx(kBench.sf).epsilon(1e-13));
    CHECK(sol.trajectory.x2.back() == doctest::Approx(kBench.vf).epsilon(1e-13));

    const ProblemSpec resting{0.7, 0.7, 0.0, 0.0, 1.0};
    const UnconstrainedSolution still = unconstrained_solution(resting, Grid(10));
    CHECK(still.c1 == 0.0);
    CHECK(still.c2 == 0.0);
    for (double u : still.control.samples) CHECK(u == 0.0);
}

TEST_CASE("oracle with inactive bound matches the discrete unconstrained constants") {
    const Grid grid(2000);
    ProblemSpec wide = kBench;
    wide.a = 9.0;
    const OracleSolution oracle = oracle_solve(wide, grid, 1e-10);
    REQUIRE(oracle.feasible);
    // the discrete terminal map shifts c1 from 6 to 6/(1-h)
    CHECK(oracle.c1 == doctest::Approx(6.0 / (1.0 - grid.h())).epsilon(1e-9));
    CHECK(oracle.c2 == doctest::Approx(-4.0).epsilon(1e-9));

    const UnconstrainedSolution cont = unconstrained_solution(wide, grid);
    CHECK(linf_dist(oracle.control, cont.control) <= 6.0 * grid.h() * 1.01);
}

TEST_CASE("oracle solves the saturated benchmark instance") {
    const Grid grid(2000);
    const OracleSolution oracle = oracle_solve(kBench, grid, 1e-10);
    REQUIRE(oracle.feasible);
    CHECK(oracle.c1 == doctest::Approx(14.5065).epsilon(2e-4));
    CHECK(oracle.c2 == doctest::Approx(-10.1509).epsilon(2e-4));

    // saturates at -a on an initial arc and at +a on a terminal arc
    CHECK(oracle.control[0] == -kBench.a);
    CHECK(oracle.control[1999] == kBench.a);
    long low = 0, high = 0;
    for (double u : oracle.control.samples) {
        if (u == -kBench.a) ++low;
        if (u == kBench.a) ++high;
    }
    // continuous junctions sit near t = 0.527 and t = 0.873
    CHECK(std::abs(static_cast<double>(low) * grid.h() - 0.527) <= 0.02);
    CHECK(std::abs(1.0 - static_cast<double>(high) * grid.h() - 0.873) <= 0.02);
}

TEST_CASE("oracle self-check: re-integration meets the boundary") {
    const Grid grid(10000);
    const double tol = 1e-10;
    const OracleSolution oracle = oracle_solve(kBench, grid, tol);
    REQUIRE(oracle.feasible);
    const TerminalMiss miss = near_miss(ShootingConstants{}, oracle.control, kBench, grid);
    CHECK(std::abs(miss.position) <= 2.0 * tol);
    CHECK(std::abs(miss.velocity) <= 2.0 * tol);
    CHECK(oracle.trajectory.x1.back() == doctest::Approx(kBench.sf).epsilon(2e-10));
    CHECK(oracle.trajectory.x2.back() == doctest::Approx(kBench.vf).epsilon(2e-10));
}

TEST_CASE("oracle flags the infeasible bound") {
    const Grid grid(2000);
    ProblemSpec tight = kBench;
    tight.a = 2.4;
    const OracleSolution oracle = oracle_solve(tight, grid, 1e-10);
    CHECK_FALSE(oracle.feasible);
    CHECK_THROWS_AS(oracle_solve(kBench, grid, 0.0), std::invalid_argument);
}

TEST_CASE("oracle constants approach the unconstrained ones as the bound relaxes") {
    const Grid grid(2000);
    const double c1_unc = 6.0 / (1.0 - grid.h());
    double previous = 1e300;
    for (double a : {2.5, 3.0, 3.5, 4.0}) {
        ProblemSpec spec = kBench;
        spec.a = a;
        const OracleSolution oracle = oracle_solve(spec, grid, 1e-10);
        REQUIRE(oracle.feasible);
        const double dist =
            std::max(std::abs(oracle.c1 - c1_unc), std::abs(oracle.c2 + 4.0));
        CHECK(dist < previous);
        previous = dist;
    }
    for (double a : {4.0, 6.0, 9.0}) {
        ProblemSpec spec = kBench;
        spec.a = a;
        const OracleSolution oracle = oracle_solve(spec, grid, 1e-10);
        REQUIRE(oracle.feasible);
        CHECK(std::abs(oracle.c1 - c1_unc) <= 1e-9);
        CHECK(std::abs(oracle.c2 + 4.0) <= 1e-9);
    }
}

TEST_CASE("reference cache round-trips bit for bit") {
    const Grid grid(1000);
    const OracleSolution oracle = oracle_solve(kBench, grid, 1e-10);
    REQUIRE(oracle.feasible);

    ReferenceSolution ref;
    ref.spec = kBench;
    ref.n = grid.n();
    ref.tol = 1e-10;
    ref.c1 = oracle.c1;
    ref.c2 = oracle.c2;
    ref.feasible = true;
    ref.control = oracle.control;

    const std::string dir = "cache-test";
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/roundtrip.bin";
    save_reference(ref, path);
    const ReferenceSolution loaded = load_reference(path);

    CHECK(loaded.n == ref.n);
    CHECK(loaded.tol == ref.tol);
    CHECK(loaded.c1 == ref.c1);
    CHECK(loaded.c2 == ref.c2);
    CHECK(loaded.feasible == ref.feasible);
    CHECK(loaded.spec.a == ref.spec.a);
    REQUIRE(loaded.control.size() == ref.control.size());
    for (std::size_t i = 0; i < ref.control.size(); ++i) {
        CHECK(loaded.control[i] == ref.control[i]);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("ensure_reference builds once and then reloads") {
    const std::string dir = "cache-test-ensure";
    std::filesystem::remove_all(dir);
    const ReferenceSolution first = ensure_reference(kBench, 5000, 1e-10, dir);
    const std::string file = dir + "/" + reference_cache_name(kBench, 5000, 1e-10);
    CHECK(std::filesystem::exists(file));
    const auto stamp = std::filesystem::last_write_time(file);

    const ReferenceSolution second = ensure_reference(kBench, 5000, 1e-10, dir);
    CHECK(std::filesystem::last_write_time(file) == stamp);
    CHECK(second.c1 == first.c1);
    CHECK(linf_dist(second.control, first.control) == 0.0);

    // distinct instances map to distinct cache files
    ProblemSpec other = kBench;
    other.a = 3.0;
    CHECK(reference_cache_name(other, 5000, 1e-10) != reference_cache_name(kBench, 5000, 1e-10));
    std::filesystem::remove_all(dir);
}
