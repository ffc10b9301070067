#include <benchmark/benchmark.h>

#include <vector>

#include "wrightmi/analysis.hpp"
#include "wrightmi/params.hpp"
#include "wrightmi/power_series.hpp"
#include "wrightmi/series.hpp"

using namespace wrightmi;

static void BM_EvalThreeParam(benchmark::State& state) {
    const ThreeParams p(0.5, 0.5, 1.25);
    const double z = state.range(0) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(eval_three_param(p, z).value);
}
BENCHMARK(BM_EvalThreeParam)->Arg(5)->Arg(10)->Arg(25);

static void BM_EvalMultiIndex(benchmark::State& state) {
    const MultiIndexParams p = MultiIndexParams::make({0.6, 0.8, 0.7}, {0.9, 1.1});
    for (auto _ : state) benchmark::DoNotOptimize(eval_multi_index(p, 1.5).value);
}
BENCHMARK(BM_EvalMultiIndex);

static void BM_CoefficientStream(benchmark::State& state) {
    const MultiIndexParams p = MultiIndexParams::make({0.6, 0.8, 0.7}, {0.9, 1.1});
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CoefficientStream s(p);
        double acc = 0.0;
        for (int k = 0; k < terms; ++k) acc += s.next().log_abs;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CoefficientStream)->Arg(40)->Arg(80);

static void BM_EigenResidual(benchmark::State& state) {
    const MultiIndexParams p = ThreeParams(0.5, 0.5, 1.25).to_multi_index();
    const std::vector<double> grid = {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(eigen_residual(p, 1.0, 40, grid).max_abs_residual);
}
BENCHMARK(BM_EigenResidual);

static void BM_LaplaceSeries(benchmark::State& state) {
    const MultiIndexParams p = ThreeParams(0.5, 0.5, 0.5).to_multi_index();
    for (auto _ : state)
        benchmark::DoNotOptimize(laplace_series_multi(p, 1.0, 2.0).value);
}
BENCHMARK(BM_LaplaceSeries);

static void BM_LaplaceQuadrature(benchmark::State& state) {
    const MultiIndexParams p = ThreeParams(0.5, 0.5, 0.5).to_multi_index();
    for (auto _ : state)
        benchmark::DoNotOptimize(laplace_quadrature(p, 1.0, 2.0, 0.5));
}
BENCHMARK(BM_LaplaceQuadrature);

static void BM_RecurrenceMain(benchmark::State& state) {
    const ThreeParams p(0.5, 0.5, 1.25);
    const std::vector<double> grid = {0.25, 0.5, 0.75, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(recurrence_residual_main(p, grid, 50).max_abs_residual);
}
BENCHMARK(BM_RecurrenceMain);

BENCHMARK_MAIN();
