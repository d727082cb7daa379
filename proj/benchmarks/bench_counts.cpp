#include <benchmark/benchmark.h>

#include "sumsq/counts.hpp"

using namespace sumsq;

static void BM_R3Direct(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(counts::r_squares(3, n));
    }
}
BENCHMARK(BM_R3Direct)->Arg(1000)->Arg(100000);

static void BM_AndrewsCrandall(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(counts::andrews_crandall_r3(n));
    }
}
BENCHMARK(BM_AndrewsCrandall)->Arg(1000)->Arg(100000);

static void BM_R3Table(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(counts::r_squares_table(3, state.range(0)));
    }
}
BENCHMARK(BM_R3Table)->Arg(5000)->Arg(100000);

static void BM_Decompose(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(counts::decompose_solutions(state.range(0)));
    }
}
BENCHMARK(BM_Decompose)->Arg(1000)->Arg(5000);

BENCHMARK_MAIN();
