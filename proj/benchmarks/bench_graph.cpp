#include <benchmark/benchmark.h>

#include "kneser/kneser_core.hpp"

static void BM_BuildKneser(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    kneser::KneserGraph g = kneser::build_kneser(n, k);
    benchmark::DoNotOptimize(g);
  }
  state.counters["vertices"] = static_cast<double>(kneser::build_kneser(n, k).order());
}
BENCHMARK(BM_BuildKneser)->Args({8, 3})->Args({10, 4})->Args({12, 5})->Args({14, 4})->Unit(benchmark::kMicrosecond);

static void BM_EnumerateSubsets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kneser::enumerate_k_subsets(n, k));
}
BENCHMARK(BM_EnumerateSubsets)->Args({20, 5})->Args({24, 6})->Unit(benchmark::kMicrosecond);
