#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "tanherf/dawson_approx.hpp"
#include "tanherf/sampler.hpp"

using namespace tanherf;

namespace {

void BM_SamplePreset(benchmark::State& state, const char* name) {
    const SamplerPreset p = preset_by_name(name);
    SamplerStream stream(TanhSeries::build(p.lambda, p.alpha), 42);
    for (auto _ : state) benchmark::DoNotOptimize(stream.sample());
}
BENCHMARK_CAPTURE(BM_SamplePreset, bassett, "bassett");
BENCHMARK_CAPTURE(BM_SamplePreset, opt1, "opt1");
BENCHMARK_CAPTURE(BM_SamplePreset, opt2, "opt2");

// baseline: the stdlib normal generator
void BM_StdNormal(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal(0.0, 1.0 / std::numbers::sqrt2);
    for (auto _ : state) benchmark::DoNotOptimize(normal(rng));
}
BENCHMARK(BM_StdNormal);

void BM_UniformSource(benchmark::State& state) {
    Xoshiro256pp rng(42);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_open01());
}
BENCHMARK(BM_UniformSource);

void BM_SegmentedDawson(benchmark::State& state) {
    const SegmentedDawson seg{builtin_g3(), 2.397};
    std::size_t i = 0;
    for (auto _ : state) {
        const double x = -8.0 + 16.0 * static_cast<double>(i++ & 4095) / 4095.0;
        benchmark::DoNotOptimize(seg.value(x));
    }
}
BENCHMARK(BM_SegmentedDawson);

}  // namespace

BENCHMARK_MAIN();
