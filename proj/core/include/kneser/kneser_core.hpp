#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kneser/vertex_set.hpp"

namespace kneser {

/// Largest ground set representable: one subset per machine word.
inline constexpr int kMaxGround = 64;
inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// Vertex-count cap for enumeration and graph construction. Reads
/// KNESER_VERTEX_CAP when set, otherwise kDefaultVertexCap.
std::size_t default_vertex_cap();

/// A subset of [n] = {1..n}; element i lives in bit i-1 of `mask`.
struct KSubset {
  std::uint64_t mask = 0;
  int ground_n = 0;

  static KSubset from_elements(int n, std::span<const int> elements);

  int size() const noexcept;
  bool contains(int element) const noexcept;
  bool disjoint(const KSubset& other) const noexcept { return (mask & other.mask) == 0; }
  std::vector<int> elements() const;
  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  /// Canonical order: lexicographic on the sorted element list.
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b);
};

/// All k-subsets of [n] in canonical (lexicographic) order.
std::vector<KSubset> enumerate_k_subsets(int n, int k, std::size_t vertex_cap = default_vertex_cap());

/// Simple undirected graph stored as one adjacency bitset per vertex.
class GenericGraph {
 public:
  GenericGraph() = default;
  explicit GenericGraph(std::size_t order);
  /// Validates symmetry and irreflexivity.
  explicit GenericGraph(std::vector<VertexSet> adjacency);

  static GenericGraph from_edges(std::size_t order,
                                 std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).contains(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const GenericGraph&, const GenericGraph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// K_{n,k}: vertices are the k-subsets of [n], adjacent iff disjoint.
/// Immutable once built; safe to share read-only across threads.
class KneserGraph {
 public:
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  const std::vector<KSubset>& vertices() const noexcept { return vertices_; }
  const KSubset& vertex(std::size_t index) const { return vertices_.at(index); }
  const GenericGraph& graph() const noexcept { return graph_; }

  /// Canonical index of a k-subset, or nullopt if it is not a vertex.
  std::optional<std::size_t> index_of(const KSubset& s) const;

  friend KneserGraph build_kneser(int n, int k, std::size_t vertex_cap);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<KSubset> vertices_;
  GenericGraph graph_;
};

KneserGraph build_kneser(int n, int k, std::size_t vertex_cap = default_vertex_cap());

/// Lexicographic rank of a k-subset of [n] among all k-subsets of [n].
std::uint64_t lex_rank(const KSubset& s);

enum class Provenance { solver, heuristic, user };
std::string to_string(Provenance p);

/// A vertex set of K_{n,k} claimed to induce maximum degree <= d.
struct Certificate {
  int n = 0;
  int k = 0;
  int d = 1;
  std::vector<KSubset> members;
  Provenance provenance = Provenance::user;

  std::size_t size() const noexcept { return members.size(); }
  /// Throws ContractError if a member is not a vertex of g.
  VertexSet to_vertex_set(const KneserGraph& g) const;
  static Certificate from_vertex_set(const KneserGraph& g, const VertexSet& s, int d,
                                     Provenance provenance);
};

/// Center I(i): all vertices containing element i (an independent set).
Certificate center(const KneserGraph& g, int element);

/// V(g) \ (N[x] u N[y]) for an edge xy.
VertexSet edge_nonneighbors(const KneserGraph& g, std::size_t x, std::size_t y);

struct InducedSubgraph {
  GenericGraph graph;
  std::vector<std::size_t> to_parent;  // subgraph index -> parent index
};

InducedSubgraph induced_subgraph(const GenericGraph& g, const VertexSet& s);

}  // namespace kneser
