#include "kneser/kneser_core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>

#include "kneser/bounds.hpp"
#include "kneser/errors.hpp"

namespace kneser {

namespace {

// Adjacency storage ceiling for build_kneser (bytes).
constexpr std::uint64_t kMaxAdjacencyBytes = std::uint64_t{2} << 30;

void check_ground(int n) {
  if (n < 0) throw DomainError("ground set size must be non-negative, got " + std::to_string(n));
  if (n > kMaxGround) {
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxGround) + "-bit subset encoding");
  }
}

std::uint64_t element_bit(int element) { return std::uint64_t{1} << (element - 1); }

}  // namespace

std::size_t default_vertex_cap() {
  const char* env = std::getenv("KNESER_VERTEX_CAP");
  if (env == nullptr || *env == '\0') return kDefaultVertexCap;
  std::size_t cap = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, cap);
  if (ec != std::errc() || ptr != end || cap == 0) {
    throw DomainError(std::string("KNESER_VERTEX_CAP is not a positive integer: ") + env);
  }
  return cap;
}

KSubset KSubset::from_elements(int n, std::span<const int> elements) {
  check_ground(n);
  KSubset s{0, n};
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw DomainError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    }
    if ((s.mask & element_bit(e)) != 0) {
      throw DomainError("duplicate element " + std::to_string(e));
    }
    s.mask |= element_bit(e);
  }
  return s;
}

int KSubset::size() const noexcept { return std::popcount(mask); }

bool KSubset::contains(int element) const noexcept {
  return element >= 1 && element <= 64 && (mask & element_bit(element)) != 0;
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    out.push_back(std::countr_zero(bits) + 1);
  }
  return out;
}

std::string KSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
  if (auto c = a.ground_n <=> b.ground_n; c != 0) return c;
  std::uint64_t x = a.mask;
  std::uint64_t y = b.mask;
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x);
    int ey = std::countr_zero(y);
    if (ex != ey) return ex <=> ey;
    x &= x - 1;
    y &= y - 1;
  }
  return (x != 0) <=> (y != 0);
}

std::vector<KSubset> enumerate_k_subsets(int n, int k, std::size_t vertex_cap) {
  check_ground(n);
  if (k < 0 || k > n) {
    throw DomainError("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const std::uint64_t total = binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (total > vertex_cap) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                        std::to_string(total) + " exceeds vertex cap " + std::to_string(vertex_cap));
  }
  std::vector<KSubset> out;
  out.reserve(static_cast<std::size_t>(total));

  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::uint64_t mask = 0;
    for (int e : c) mask |= element_bit(e);
    out.push_back(KSubset{mask, n});
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::uint64_t lex_rank(const KSubset& s) {
  const auto n = static_cast<std::uint64_t>(s.ground_n);
  const auto k = static_cast<std::uint64_t>(s.size());
  std::uint64_t rank = 0;
  std::uint64_t prev = 0;
  std::uint64_t i = 1;
  for (int e : s.elements()) {
    const auto ce = static_cast<std::uint64_t>(e);
    for (std::uint64_t j = prev + 1; j < ce; ++j) rank += binom(n - j, k - i);
    prev = ce;
    ++i;
  }
  return rank;
}

GenericGraph::GenericGraph(std::size_t order) : adj_(order, VertexSet(order)) {}

GenericGraph::GenericGraph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (adj_[v].universe() != n) throw ContractError("adjacency row has wrong universe size");
    if (adj_[v].contains(v)) throw ContractError("self-loop at vertex " + std::to_string(v));
    adj_[v].for_each([&](std::size_t u) {
      if (!adj_[u].contains(v)) {
        throw ContractError("asymmetric adjacency between " + std::to_string(v) + " and " +
                            std::to_string(u));
      }
    });
  }
}

GenericGraph GenericGraph::from_edges(std::size_t order,
                                      std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<VertexSet> adj(order, VertexSet(order));
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  GenericGraph g;
  g.adj_ = std::move(adj);
  return g;
}

std::size_t GenericGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> GenericGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::optional<std::size_t> KneserGraph::index_of(const KSubset& s) const {
  if (s.ground_n != n_ || s.size() != k_) return std::nullopt;
  if (n_ < 64 && (s.mask >> n_) != 0) return std::nullopt;
  return static_cast<std::size_t>(lex_rank(s));
}

KneserGraph build_kneser(int n, int k, std::size_t vertex_cap) {
  check_ground(n);
  if (k < 1 || n < 2 * k) {
    throw DomainError("Kneser graph K(" + std::to_string(n) + "," + std::to_string(k) +
                      ") needs n >= 2k >= 2");
  }
  KneserGraph g;
  g.n_ = n;
  g.k_ = k;
  g.vertices_ = enumerate_k_subsets(n, k, vertex_cap);
  const std::size_t order = g.vertices_.size();
  const std::uint64_t words = (order + 63) / 64;
  if (words * 8 * order > kMaxAdjacencyBytes) {
    throw CapacityError("adjacency bitsets for " + std::to_string(order) +
                        " vertices exceed the memory ceiling");
  }

  // Neighbours of x are exactly the k-subsets of its complement.
  std::vector<VertexSet> adj(order, VertexSet(order));
  std::vector<int> rest;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < order; ++v) {
    rest.clear();
    for (int e = 1; e <= n; ++e) {
      if (!g.vertices_[v].contains(e)) rest.push_back(e);
    }
    const std::size_t m = rest.size();
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (auto p : pick) mask |= element_bit(rest[p]);
      adj[v].insert(static_cast<std::size_t>(lex_rank(KSubset{mask, n})));
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pick.size()) - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - pick.size() + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  g.graph_ = GenericGraph(std::move(adj));
  return g;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::solver: return "solver";
    case Provenance::heuristic: return "heuristic";
    case Provenance::user: return "user";
  }
  return "user";
}

VertexSet Certificate::to_vertex_set(const KneserGraph& g) const {
  VertexSet s(g.order());
  for (const auto& m : members) {
    auto idx = g.index_of(m);
    if (!idx) throw ContractError("certificate member " + m.to_string() + " is not a vertex of K(" +
                                  std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
    s.insert(*idx);
  }
  return s;
}

Certificate Certificate::from_vertex_set(const KneserGraph& g, const VertexSet& s, int d,
                                         Provenance provenance) {
  Certificate c{g.n(), g.k(), d, {}, provenance};
  s.for_each([&](std::size_t v) { c.members.push_back(g.vertex(v)); });
  return c;
}

Certificate center(const KneserGraph& g, int element) {
  if (element < 1 || element > g.n()) {
    throw DomainError("center element " + std::to_string(element) + " outside [1, " +
                      std::to_string(g.n()) + "]");
  }
  Certificate c{g.n(), g.k(), 0, {}, Provenance::heuristic};
  for (const auto& v : g.vertices()) {
    if (v.contains(element)) c.members.push_back(v);
  }
  return c;
}

VertexSet edge_nonneighbors(const KneserGraph& g, std::size_t x, std::size_t y) {
  if (x >= g.order() || y >= g.order()) throw ContractError("vertex index out of range");
  if (!g.graph().adjacent(x, y)) {
    throw ContractError(g.vertex(x).to_string() + " and " + g.vertex(y).to_string() +
                        " are not adjacent");
  }
  VertexSet closed = g.graph().neighbors(x) | g.graph().neighbors(y);
  closed.insert(x);
  closed.insert(y);
  return closed.complement();
}

InducedSubgraph induced_subgraph(const GenericGraph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  const std::size_t m = out.to_parent.size();
  std::vector<std::size_t> to_child(g.order(), m);
  for (std::size_t i = 0; i < m; ++i) to_child[out.to_parent[i]] = i;
  std::vector<VertexSet> adj(m, VertexSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    (g.neighbors(out.to_parent[i]) & s).for_each([&](std::size_t u) { adj[i].insert(to_child[u]); });
  }
  out.graph = GenericGraph(std::move(adj));
  return out;
}

}  // namespace kneser
