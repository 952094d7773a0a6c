#include <benchmark/benchmark.h>

#include "hkwall/fixed.hpp"
#include "hkwall/verify.hpp"
#include "hkwall/walls.hpp"

using namespace hkwall;

static void BM_EnumerateWalls(benchmark::State& state) {
  const auto ctx = GenusContext::make(state.range(0), DivCase::Div2);
  for (auto _ : state) {
    auto walls = enumerate_walls_div2(ctx);
    benchmark::DoNotOptimize(walls);
  }
}
BENCHMARK(BM_EnumerateWalls)->Arg(12)->Arg(64)->Arg(200);

static void BM_ArfCensus(benchmark::State& state) {
  for (auto _ : state) {
    auto counts = arf_census(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_ArfCensus)->Arg(2)->Arg(3)->Arg(4);

static void BM_VerifySweep(benchmark::State& state) {
  for (auto _ : state) {
    auto result = run_verify(state.range(0));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_VerifySweep)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
