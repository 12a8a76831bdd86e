#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "kneser/kneser_core.hpp"
#include "kneser/vertex_set.hpp"

namespace kneser {

/// True iff every vertex of s has at most d neighbours inside s.
bool check_max_degree(const GenericGraph& g, const VertexSet& s, int d);

/// True iff g - cover contains no path on three vertices.
bool check_p3_cover(const GenericGraph& g, const VertexSet& cover);

/// Bipartite graph with sides X = [0, x_size) and Y = [0, y_size).
struct BipartiteGraph {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::vector<std::vector<std::size_t>> x_adj;  // X vertex -> Y neighbours

  static BipartiteGraph from_edges(std::size_t x_size, std::size_t y_size,
                                   std::span<const std::pair<std::size_t, std::size_t>> edges);
};

struct XMatching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (x, y), one per X vertex
};

struct HallViolator {
  std::vector<std::size_t> subset;        // W within X
  std::vector<std::size_t> neighborhood;  // N(W) within Y, |N(W)| < |W|
};

using MatchingResult = std::variant<XMatching, HallViolator>;

/// Either a matching saturating X (Hopcroft-Karp) or a set W with |N(W)| < |W|.
MatchingResult find_x_matching(const BipartiteGraph& g);

/// For L inside the center I(2k+1) of O_k = K_{2k+1,k}: with D the vertices
/// avoiding 2k+1, returns k |N(L) & D| >= (k+1) |L|. `odd` must be O_k.
bool odd_expansion_check(const KneserGraph& odd, const VertexSet& l);
/// Convenience form that builds O_k.
bool odd_expansion_check(int k, std::span<const KSubset> l);

/// Bipartite graph between L and N(L) & D in O_k; X indices follow
/// ascending vertex order of L, Y indices ascending order of N(L) & D.
struct ExpansionGraph {
  BipartiteGraph graph;
  std::vector<std::size_t> x_vertices;
  std::vector<std::size_t> y_vertices;
};
ExpansionGraph odd_expansion_graph(const KneserGraph& odd, const VertexSet& l);

/// A cyclic order of [n] normalised so that element 1 sits at position 0.
class CyclicArrangement {
 public:
  /// Rotates `order` so that 1 comes first; throws DomainError unless it is
  /// a permutation of [n].
  explicit CyclicArrangement(std::vector<int> order);

  static CyclicArrangement identity(int n);
  /// Advances to the next normalised arrangement in lexicographic order of
  /// positions 1..n-1; returns false after the last one.
  bool next();

  int n() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const noexcept { return order_; }
  /// Masks of the n cyclic windows of length k.
  std::vector<std::uint64_t> window_masks(int k) const;

  friend bool operator==(const CyclicArrangement&, const CyclicArrangement&) = default;

 private:
  std::vector<int> order_;
};

/// Number of family members whose elements fill k cyclically consecutive positions.
std::size_t substrings_in_arrangement(const CyclicArrangement& c, std::span<const KSubset> family,
                                      int k);

inline constexpr int kMaxArrangementGround = 9;

struct SubstringMaximum {
  std::size_t max_count = 0;
  CyclicArrangement witness = CyclicArrangement::identity(1);
};

/// Maximum of substrings_in_arrangement over all (n-1)! arrangements.
SubstringMaximum max_substrings(int n, int k, std::span<const KSubset> family);

/// Sum over all (n-1)! arrangements equals |family| k! (n-k)!.
bool double_count_identity(int n, int k, std::span<const KSubset> family);

}  // namespace kneser
