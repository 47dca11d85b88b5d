// Serial reference vs OpenMP kernels on the published lattice size.
#include <benchmark/benchmark.h>

#include <vector>

#include "rootbench/harness.hpp"
#include "rootbench/kernels.hpp"
#include "rootbench/solver.hpp"

using namespace rootbench;

namespace {

struct Fixture {
    Lattice lattice{Box{-25.0, 25.0, 2}, 2500};
    Trajectory trajectory;
    NeighborTable neighbors = build_neighbors(lattice, 3.0);
    std::vector<double> values = std::vector<double>(lattice.size());
    std::vector<double> out = std::vector<double>(lattice.size());

    Fixture() : trajectory(make()) {
        const Objective f = [this](std::span<const double> x) { return trajectory.value_unchecked(1, x); };
        kernels::evaluate_all_serial(lattice, f, values);
    }

    static Trajectory make() {
        RngState rng(7);
        return Trajectory::generate(RotatingPeaksParams{}, 1, rng);
    }
};

Fixture& fixture() {
    static Fixture f;
    return f;
}

void BM_EvaluateSerial(benchmark::State& state) {
    auto& fx = fixture();
    const Objective f = [&fx](std::span<const double> x) { return fx.trajectory.value_unchecked(1, x); };
    for (auto _ : state) {
        kernels::evaluate_all_serial(fx.lattice, f, fx.out);
        benchmark::DoNotOptimize(fx.out.data());
    }
}

void BM_EvaluateParallel(benchmark::State& state) {
    auto& fx = fixture();
    const Objective f = [&fx](std::span<const double> x) { return fx.trajectory.value_unchecked(1, x); };
    for (auto _ : state) {
        kernels::evaluate_all_parallel(fx.lattice, f, fx.out);
        benchmark::DoNotOptimize(fx.out.data());
    }
}

void BM_NeighborhoodSerial(benchmark::State& state) {
    auto& fx = fixture();
    for (auto _ : state) {
        kernels::neighborhood_average_serial(fx.neighbors, fx.values, fx.out);
        benchmark::DoNotOptimize(fx.out.data());
    }
}

void BM_NeighborhoodParallel(benchmark::State& state) {
    auto& fx = fixture();
    for (auto _ : state) {
        kernels::neighborhood_average_parallel(fx.neighbors, fx.values, fx.out);
        benchmark::DoNotOptimize(fx.out.data());
    }
}

void BM_Replication(benchmark::State& state) {
    auto config = default_config(state.range(0) == 1 ? BenchmarkKind::conic : BenchmarkKind::rotating);
    config.method = static_cast<Method>(state.range(1));
    std::size_t rep = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_replication(config, rep++));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial);
BENCHMARK(BM_EvaluateParallel);
BENCHMARK(BM_NeighborhoodSerial);
BENCHMARK(BM_NeighborhoodParallel);
BENCHMARK(BM_Replication)->Args({1, 0})->Args({1, 1})->Args({1, 2})->Args({2, 0})->Args({2, 1})->Args({2, 2})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
