#include <benchmark/benchmark.h>

#include <random>

#include "ocsplit/dynamics.hpp"
#include "ocsplit/problem.hpp"
#include "ocsplit/projectors.hpp"

using namespace ocsplit;

namespace {

const ProblemSpec kBench{0.0, 0.0, 1.0, 0.0, 2.5};

ControlVector random_control(std::size_t n) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    ControlVector u = ControlVector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = dist(rng);
    return u;
}

}  // namespace

static void BM_EulerIntegrate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid grid(static_cast<long>(n));
    const ControlVector u = random_control(n);
    for (auto _ : state) {
        StateTrajectory traj = euler_integrate(u, kBench, grid);
        benchmark::DoNotOptimize(traj.x1.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EulerIntegrate)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

static void BM_ProjectBox(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ControlVector u = random_control(n);
    ControlVector out;
    for (auto _ : state) {
        project_box_into(u, kBench.a, out);
        benchmark::DoNotOptimize(out.samples.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectBox)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

static void BM_ProjectAffineContinuous(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid grid(static_cast<long>(n));
    const AffineProjector projector(kBench, grid, JacobianMode::Continuous);
    const ControlVector u = random_control(n);
    ControlVector out;
    for (auto _ : state) {
        benchmark::DoNotOptimize(projector.apply(u, out));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectAffineContinuous)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

static void BM_ProjectAffineExactDiscrete(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid grid(static_cast<long>(n));
    const AffineProjector projector(kBench, grid, JacobianMode::ExactDiscrete);
    const ControlVector u = random_control(n);
    ControlVector out;
    for (auto _ : state) {
        benchmark::DoNotOptimize(projector.apply(u, out));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectAffineExactDiscrete)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

BENCHMARK_MAIN();
