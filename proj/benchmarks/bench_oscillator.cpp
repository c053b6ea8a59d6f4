#include <benchmark/benchmark.h>

#include <vector>

#include "wlg/grid.hpp"
#include "wlg/group_element.hpp"
#include "wlg/oscillator.hpp"
#include "wlg/parton.hpp"

using namespace wlg;

static void BM_Amplitude(benchmark::State& state) {
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(amplitude(Rapidity{1.0}, z, -0.4));
        z += 1e-7;
    }
}
BENCHMARK(BM_Amplitude);

static void BM_SampleGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double half = default_half_width(Rapidity{1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_grid(
            [](double z, double t) { return amplitude(Rapidity{1.0}, z, t); },
            GridWindow{{0.0, 0.0}, {half, half}}, {n, n}));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SampleGrid)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_Norm2(benchmark::State& state) {
    const double half = default_half_width(Rapidity{1.0});
    const Grid2D grid = sample_grid(
        [](double z, double t) { return amplitude(Rapidity{1.0}, z, t); },
        GridWindow{{0.0, 0.0}, {half, half}}, {400, 400});
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm2(grid));
    }
}
BENCHMARK(BM_Norm2);

static void BM_InvariantResidual(benchmark::State& state) {
    GridGeometry geom;
    geom.origin = {-3.0, -3.0};
    geom.spacing = {0.02, 0.02};
    geom.n = {301, 301};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            invariant_equation_residual(Rapidity{1.0}, geom));
    }
}
BENCHMARK(BM_InvariantResidual);

static void BM_LongitudinalDistribution(benchmark::State& state) {
    std::vector<double> qz;
    for (int i = -50; i <= 50; ++i) qz.push_back(0.2 * i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            longitudinal_momentum_distribution(Rapidity{2.0}, qz));
    }
}
BENCHMARK(BM_LongitudinalDistribution);
