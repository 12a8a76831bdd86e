#include <benchmark/benchmark.h>

#include "kneser/bounds.hpp"
#include "kneser/certify.hpp"

using namespace kneser;

static void BM_Report(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(report(n, k));
}
BENCHMARK(BM_Report)->Args({9, 3})->Args({30, 2})->Args({40, 8});

static void BM_N0Prime(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n0prime(k));
}
BENCHMARK(BM_N0Prime)->Arg(2)->Arg(3)->Arg(5);

static void BM_MaxSubstrings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<KSubset> family = enumerate_k_subsets(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_substrings(n, 2, family));
}
BENCHMARK(BM_MaxSubstrings)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
