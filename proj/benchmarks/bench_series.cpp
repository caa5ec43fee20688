#include <benchmark/benchmark.h>

#include <cmath>

#include "tanherf/reffuncs.hpp"
#include "tanherf/tanh_series.hpp"

using namespace tanherf;

namespace {

double sweep_arg(std::size_t i) {
    return -6.0 + 12.0 * static_cast<double>(i & 4095) / 4095.0;
}

void BM_SeriesEval(benchmark::State& state) {
    const int lambda = static_cast<int>(state.range(0));
    const TanhSeries s = TanhSeries::build(lambda, 1.1 / std::sqrt(lambda));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(s.value(sweep_arg(i++)));
}
BENCHMARK(BM_SeriesEval)->Arg(1)->Arg(2)->Arg(5)->Arg(10)->Arg(30);

void BM_SeriesDerivative(benchmark::State& state) {
    const TanhSeries s = TanhSeries::build(10, 0.3224);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(s.derivative(sweep_arg(i++)));
}
BENCHMARK(BM_SeriesDerivative);

void BM_ErfReference(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(erf_ref(static_cast<long double>(sweep_arg(i++))));
}
BENCHMARK(BM_ErfReference);

void BM_ErfStdlib(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(std::erf(sweep_arg(i++)));
}
BENCHMARK(BM_ErfStdlib);

void BM_DawsonReference(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(dawson_ref(static_cast<long double>(sweep_arg(i++))));
}
BENCHMARK(BM_DawsonReference);

}  // namespace

BENCHMARK_MAIN();
