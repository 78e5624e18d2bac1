#include "kradius/bounds.hpp"
#include "kradius/builder.hpp"
#include "kradius/cycles.hpp"
#include "kradius/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Construct(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto k = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kradius::construct(n, k));
    }
    state.counters["length"] = static_cast<double>(
        kradius::construct(n, k).sequence.symbols.size());
}
BENCHMARK(BM_Construct)
    ->Args({200, 2})
    ->Args({500, 2})
    ->Args({1000, 2})
    ->Args({2000, 2})
    ->Args({500, 1})
    ->Args({512, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
    const kradius::Sequence seq = kradius::construct(2000, 2).sequence;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kradius::verify(seq));
    }
    state.counters["terms"] = static_cast<double>(seq.symbols.size());
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_CycleCover(benchmark::State& state) {
    const kradius::CycleSystem grid(2, 397);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid.sequence());
    }
}
BENCHMARK(BM_CycleCover)->Unit(benchmark::kMillisecond);

void BM_GcdSum(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kradius::gcd_sum(2000));
    }
}
BENCHMARK(BM_GcdSum);

void BM_Ghosh(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kradius::ghosh_1radius(301));
    }
}
BENCHMARK(BM_Ghosh)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
