#include <benchmark/benchmark.h>

#include "sumsq/qforms.hpp"

using namespace sumsq;

static void BM_EnumerateReduced(benchmark::State& state)
{
    const std::int64_t D = -state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforms::enumerate_reduced(D));
    }
}
BENCHMARK(BM_EnumerateReduced)->Arg(44)->Arg(3999)->Arg(99999);

static void BM_HurwitzUncached(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforms::hurwitz_direct_uncached(state.range(0)));
    }
}
BENCHMARK(BM_HurwitzUncached)->Arg(4000)->Arg(99999);

static void BM_HurwitzDivisorSum(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforms::hurwitz_divisor_sum(state.range(0)));
    }
}
BENCHMARK(BM_HurwitzDivisorSum)->Arg(4000)->Arg(99999);

static void BM_Bijection(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforms::bijection_census(state.range(0)));
    }
}
BENCHMARK(BM_Bijection)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
