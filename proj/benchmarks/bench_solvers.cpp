// Whole-solve timings on the saturated benchmark instance. Relative ordering
// (Dykstra slower than DR and AAC at equal tolerance) is the interesting
// output; absolute times are hardware-bound.

#include <benchmark/benchmark.h>

#include "ocsplit/problem.hpp"
#include "ocsplit/solvers.hpp"

using namespace ocsplit;

namespace {

const ProblemSpec kBench{0.0, 0.0, 1.0, 0.0, 2.5};

SolverConfig tuned(Method method) {
    SolverConfig cfg;
    cfg.method = method;
    cfg.lambda = 0.7466;
    cfg.alpha = 1.0;
    cfg.beta = 0.8617;
    return cfg;
}

void run_solver(benchmark::State& state, Method method) {
    const Grid grid(state.range(0));
    const SolverConfig cfg = tuned(method);
    long iterations = 0;
    for (auto _ : state) {
        const SolveReport report = solve(kBench, grid, cfg);
        iterations = report.iterations;
        benchmark::DoNotOptimize(report.control.samples.data());
    }
    state.counters["iterations"] = static_cast<double>(iterations);
}

}  // namespace

static void BM_SolveDykstra(benchmark::State& state) { run_solver(state, Method::Dykstra); }
static void BM_SolveDouglasRachford(benchmark::State& state) {
    run_solver(state, Method::DouglasRachford);
}
static void BM_SolveAAC(benchmark::State& state) {
    run_solver(state, Method::AragonArtachoCampoy);
}
static void BM_SolveAlternating(benchmark::State& state) {
    run_solver(state, Method::Alternating);
}

BENCHMARK(BM_SolveDykstra)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveDouglasRachford)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveAAC)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveAlternating)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
