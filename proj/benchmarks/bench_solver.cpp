#include <benchmark/benchmark.h>

#include "kneser/solver.hpp"

using namespace kneser;

// Kneser wrapper: symmetry fixing, heuristic seed and the closed-form root cap.
static void BM_SolveKneser(benchmark::State& state) {
  const KneserGraph g = build_kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SearchBudget budget;
  budget.thread_count = static_cast<unsigned>(state.range(2));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SolveResult r = solve_kneser(g, 1, budget);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.best_size);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveKneser)
    ->Args({7, 3, 1})
    ->Args({8, 3, 1})
    ->Args({8, 3, 4})
    ->Args({9, 3, 1})
    ->Unit(benchmark::kMillisecond);

// Same instances through the generic solver: no Kneser-specific help.
static void BM_SolveGeneric(benchmark::State& state) {
  const KneserGraph g = build_kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int d = static_cast<int>(state.range(2));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SolveResult r = solve(g.graph(), d);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.best_size);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveGeneric)
    ->Args({8, 3, 0})
    ->Args({8, 3, 1})
    ->Args({9, 3, 1})
    ->Args({7, 3, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const KneserGraph g = build_kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int d = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(g.graph(), d));
}
BENCHMARK(BM_BruteForce)->Args({5, 2, 1})->Args({6, 3, 1})->Args({6, 2, 2})->Unit(benchmark::kMillisecond);
