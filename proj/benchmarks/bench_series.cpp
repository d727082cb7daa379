#include <benchmark/benchmark.h>

#include "sumsq/genfun.hpp"
#include "sumsq/series.hpp"

using namespace sumsq;

static void BM_Multiply(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = series::theta_signed(n);
    const auto b = series::pochhammer(1, 1, 1, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_Multiply)->Arg(100)->Arg(500)->Arg(2000);

static void BM_Invert(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = series::pochhammer(1, 1, 3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series::invert(a));
    }
}
BENCHMARK(BM_Invert)->Arg(100)->Arg(500)->Arg(2000);

static void BM_AndrewsIdentity(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(genfun::run_identity(genfun::IdentityId::andrews516, n));
    }
}
BENCHMARK(BM_AndrewsIdentity)->Arg(100)->Arg(500);

BENCHMARK_MAIN();
