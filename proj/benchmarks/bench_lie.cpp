#include <benchmark/benchmark.h>

#include <vector>

#include "wlg/contraction.hpp"
#include "wlg/generators.hpp"
#include "wlg/group_element.hpp"
#include "wlg/little_group.hpp"

using namespace wlg;

static void BM_ExpRotation(benchmark::State& state) {
    const Matrix4c gen = generator_matrix(GeneratorLabel::J2);
    double theta = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_generator(gen, theta).matrix);
        theta += 1e-6;
    }
}
BENCHMARK(BM_ExpRotation);

static void BM_ExpBoost(benchmark::State& state) {
    const Matrix4c gen = generator_matrix(GeneratorLabel::K3);
    double theta = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_generator(gen, theta).matrix);
        theta += 1e-6;
    }
}
BENCHMARK(BM_ExpBoost);

static void BM_ExpNilpotent(benchmark::State& state) {
    double u = 0.4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauge_element(u, -0.25).matrix);
        u += 1e-6;
    }
}
BENCHMARK(BM_ExpNilpotent);

static void BM_Commutator(benchmark::State& state) {
    const Matrix4c a = generator_matrix(GeneratorLabel::J1);
    const Matrix4c b = generator_matrix(GeneratorLabel::K2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator(a, b));
    }
}
BENCHMARK(BM_Commutator);

static void BM_OperatorNorm(benchmark::State& state) {
    const Matrix4c m = boosted_rotation(2, Rapidity{3.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_norm(m));
    }
}
BENCHMARK(BM_OperatorNorm);

static void BM_ContractionReport(benchmark::State& state) {
    std::vector<double> etas;
    for (double e = 1.0; e <= 8.0; e += 0.5) etas.push_back(e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(contraction_report(etas));
    }
}
BENCHMARK(BM_ContractionReport);

static void BM_VerifyInvariance(benchmark::State& state) {
    const FourVector p{0, 0, std::sinh(2.0), std::cosh(2.0)};
    const std::array<double, 3> params{0.7, -1.1, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_invariance(p, params));
    }
}
BENCHMARK(BM_VerifyInvariance);

BENCHMARK_MAIN();
