#include <benchmark/benchmark.h>

#include "sumsq/battery.hpp"
#include "sumsq/numeric.hpp"

using namespace sumsq::numeric;

namespace {

EvalContext context(NumericIdentity id, int digits)
{
    EvalContext ctx;
    ctx.precision_digits = digits;
    ctx.tolerance = 1e-9;
    ctx.point = frozen_battery(id).front();
    return ctx;
}

} // namespace

static void BM_Identity(benchmark::State& state)
{
    const auto id = static_cast<NumericIdentity>(state.range(0));
    const auto ctx = context(id, static_cast<int>(state.range(1)));
    state.SetLabel(std::string(to_string(id)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_numeric_identity(id, ctx));
    }
}
BENCHMARK(BM_Identity)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {50, 200}})
    ->Unit(benchmark::kMillisecond);

static void BM_Pochhammer(benchmark::State& state)
{
    auto ctx = context(NumericIdentity::kronecker, static_cast<int>(state.range(0)));
    const auto a = ctx.mp({0.4, 0.3});
    const auto q = ctx.mp({0.3, 0.1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_pochhammer_num(a, q, ctx));
    }
}
BENCHMARK(BM_Pochhammer)->Arg(50)->Arg(500);

BENCHMARK_MAIN();
