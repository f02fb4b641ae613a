#include <benchmark/benchmark.h>

#include "logseries/simulation.hpp"

using namespace logseries;

static void BM_Pmf(benchmark::State& state) {
  const Param p(0.6);
  int x = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmf(p, x));
    x = x % 50 + 1;
  }
}
BENCHMARK(BM_Pmf);

static void BM_Sample(benchmark::State& state) {
  const Param p(0.6);
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(draw(p, rng));
  }
}
BENCHMARK(BM_Sample);

static void BM_StirlingTableBuild(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LogStirlingTable table;
    benchmark::DoNotOptimize(table.log_stirling(rows, rows / 2));
  }
}
BENCHMARK(BM_StirlingTableBuild)->Arg(100)->Arg(400)->Arg(1000);

static void BM_UmvuePmfVariance(benchmark::State& state) {
  LogStirlingTable table;
  const Param p(0.6);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(umvue_pmf_variance(n, p, 12, table).value);
  }
}
BENCHMARK(BM_UmvuePmfVariance)->Arg(5)->Arg(20)->Arg(50);

static void BM_FitMethods(benchmark::State& state) {
  const Param p(0.6);
  const Sample s(sample(p, static_cast<int>(state.range(0)), 7u));
  const Method m = static_cast<Method>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(m, s).p_hat);
  }
}
BENCHMARK(BM_FitMethods)
    ->Args({100, static_cast<long>(Method::Mle)})
    ->Args({100, static_cast<long>(Method::Lse)})
    ->Args({100, static_cast<long>(Method::Wlse)})
    ->Args({100, static_cast<long>(Method::Pce)});

BENCHMARK_MAIN();
