#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "kneser/kneser_core.hpp"
#include "kneser/vertex_set.hpp"

namespace kneser {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
  unsigned thread_count = 1;
};

struct SolveResult {
  std::size_t best_size = 0;
  VertexSet witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
  /// Name of the estimate that pruned the root node, empty if the root branched.
  std::string bound_source;
};

/// Largest vertex set inducing maximum degree <= d (d = 0: independence
/// number, d = 1: dissociation number). Exhausting the budget returns the
/// incumbent with optimal = false.
///
/// Supports graphs up to kMaxSolverOrder vertices.
SolveResult solve(const GenericGraph& g, int d, const SearchBudget& budget = {});

inline constexpr std::size_t kMaxSolverOrder = 4096;

/// solve() on K_{n,k}, fixing vertex {1..k} at the root (vertex
/// transitivity), seeding the incumbent with heuristic_lower and, for d <= 1,
/// using the closed-form upper bounds as a root cap.
SolveResult solve_kneser(int n, int k, int d, const SearchBudget& budget = {});

/// Same as solve_kneser on an already-built graph.
SolveResult solve_kneser(const KneserGraph& g, int d, const SearchBudget& budget = {});

inline constexpr std::size_t kBruteForceCap = 26;

/// Exhaustive maximum over all vertex subsets; test oracle.
std::size_t brute_force(const GenericGraph& g, int d, std::size_t order_cap = kBruteForceCap);

/// Best construction among the center I(1), all k-subsets of [2k], and for
/// k = 2 the six-vertex set {12,34,13,14,23,24}. Always a valid d = 1 set.
Certificate heuristic_lower(int n, int k);

struct Psi3Result {
  std::size_t value = 0;
  bool optimal = false;
};

/// 3-path vertex cover number |V| - diss(g).
Psi3Result psi3(const GenericGraph& g, const SearchBudget& budget = {});

}  // namespace kneser
