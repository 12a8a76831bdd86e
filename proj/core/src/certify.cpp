#include "kneser/certify.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "kneser/bounds.hpp"
#include "kneser/errors.hpp"

namespace kneser {

bool check_max_degree(const GenericGraph& g, const VertexSet& s, int d) {
  if (s.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  if (d < 0) throw DomainError("degree bound d must be non-negative");
  const auto limit = static_cast<std::size_t>(d);
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersection_count(s) > limit) ok = false;
  });
  return ok;
}

bool check_p3_cover(const GenericGraph& g, const VertexSet& cover) {
  if (cover.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  // A graph has no P3 iff no vertex has two neighbours.
  const VertexSet rest = cover.complement();
  bool ok = true;
  rest.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersection_count(rest) >= 2) ok = false;
  });
  return ok;
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t x_size, std::size_t y_size,
                                          std::span<const std::pair<std::size_t, std::size_t>> edges) {
  BipartiteGraph g{x_size, y_size, std::vector<std::vector<std::size_t>>(x_size)};
  for (auto [x, y] : edges) {
    if (x >= x_size || y >= y_size) throw ContractError("bipartite edge endpoint out of range");
    g.x_adj[x].push_back(y);
  }
  for (auto& row : g.x_adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

namespace {

constexpr std::size_t kNil = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g), match_x_(g.x_size, kNil), match_y_(g.y_size, kNil), dist_(g.x_size) {}

  void run() {
    while (bfs()) {
      for (std::size_t x = 0; x < g_.x_size; ++x) {
        if (match_x_[x] == kNil) dfs(x);
      }
    }
  }

  const std::vector<std::size_t>& match_x() const { return match_x_; }
  const std::vector<std::size_t>& match_y() const { return match_y_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t x = 0; x < g_.x_size; ++x) {
      if (match_x_[x] == kNil) {
        dist_[x] = 0;
        q.push(x);
      } else {
        dist_[x] = kNil;
      }
    }
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : g_.x_adj[x]) {
        const std::size_t x2 = match_y_[y];
        if (x2 == kNil) {
          found = true;
        } else if (dist_[x2] == kNil) {
          dist_[x2] = dist_[x] + 1;
          q.push(x2);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t x) {
    for (std::size_t y : g_.x_adj[x]) {
      const std::size_t x2 = match_y_[y];
      if (x2 == kNil || (dist_[x2] == dist_[x] + 1 && dfs(x2))) {
        match_x_[x] = y;
        match_y_[y] = x;
        return true;
      }
    }
    dist_[x] = kNil;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::size_t> match_x_;
  std::vector<std::size_t> match_y_;
  std::vector<std::size_t> dist_;
};

}  // namespace

MatchingResult find_x_matching(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  hk.run();
  const auto& mx = hk.match_x();
  const auto& my = hk.match_y();
  const auto free_x = std::find(mx.begin(), mx.end(), kNil);
  if (free_x == mx.end()) {
    XMatching m;
    for (std::size_t x = 0; x < g.x_size; ++x) m.pairs.emplace_back(x, mx[x]);
    return m;
  }
  // Alternating search from an exposed X vertex: every Y vertex reached is
  // matched (the matching is maximum), so |N(W)| = |W| - 1.
  std::vector<bool> seen_x(g.x_size, false);
  std::vector<bool> seen_y(g.y_size, false);
  std::queue<std::size_t> q;
  const auto start = static_cast<std::size_t>(free_x - mx.begin());
  seen_x[start] = true;
  q.push(start);
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop();
    for (std::size_t y : g.x_adj[x]) {
      if (seen_y[y]) continue;
      seen_y[y] = true;
      const std::size_t x2 = my[y];
      if (x2 != kNil && !seen_x[x2]) {
        seen_x[x2] = true;
        q.push(x2);
      }
    }
  }
  HallViolator w;
  for (std::size_t x = 0; x < g.x_size; ++x) {
    if (seen_x[x]) w.subset.push_back(x);
  }
  for (std::size_t y = 0; y < g.y_size; ++y) {
    if (seen_y[y]) w.neighborhood.push_back(y);
  }
  return w;
}

namespace {

struct OddParts {
  int k;
  int top;        // element 2k+1
  VertexSet low;  // D: vertices avoiding 2k+1
};

OddParts odd_parts(const KneserGraph& odd, const VertexSet& l) {
  if (odd.n() != 2 * odd.k() + 1) {
    throw ContractError("expected an odd graph K(2k+1,k), got K(" + std::to_string(odd.n()) + "," +
                        std::to_string(odd.k()) + ")");
  }
  if (l.universe() != odd.order()) throw ContractError("vertex set universe does not match graph");
  if (l.empty()) throw ContractError("L must be nonempty");
  const int top = odd.n();
  VertexSet low(odd.order());
  for (std::size_t v = 0; v < odd.order(); ++v) {
    if (!odd.vertex(v).contains(top)) low.insert(v);
  }
  if (l.intersects(low)) throw ContractError("L is not contained in the center I(2k+1)");
  return {odd.k(), top, std::move(low)};
}

}  // namespace

bool odd_expansion_check(const KneserGraph& odd, const VertexSet& l) {
  const OddParts parts = odd_parts(odd, l);
  VertexSet nbrs(odd.order());
  l.for_each([&](std::size_t v) { nbrs |= odd.graph().neighbors(v); });
  nbrs &= parts.low;
  const auto k = static_cast<std::uint64_t>(parts.k);
  return k * nbrs.count() >= (k + 1) * l.count();
}

bool odd_expansion_check(int k, std::span<const KSubset> l) {
  const KneserGraph odd = build_kneser(2 * k + 1, k);
  VertexSet set(odd.order());
  for (const auto& s : l) {
    auto idx = odd.index_of(s);
    if (!idx) throw ContractError(s.to_string() + " is not a vertex of the odd graph");
    set.insert(*idx);
  }
  return odd_expansion_check(odd, set);
}

ExpansionGraph odd_expansion_graph(const KneserGraph& odd, const VertexSet& l) {
  const OddParts parts = odd_parts(odd, l);
  ExpansionGraph out;
  out.x_vertices = l.to_vector();
  VertexSet nbrs(odd.order());
  l.for_each([&](std::size_t v) { nbrs |= odd.graph().neighbors(v); });
  nbrs &= parts.low;
  out.y_vertices = nbrs.to_vector();
  std::vector<std::size_t> y_index(odd.order(), kNil);
  for (std::size_t i = 0; i < out.y_vertices.size(); ++i) y_index[out.y_vertices[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < out.x_vertices.size(); ++i) {
    (odd.graph().neighbors(out.x_vertices[i]) & parts.low).for_each([&](std::size_t y) {
      edges.emplace_back(i, y_index[y]);
    });
  }
  out.graph = BipartiteGraph::from_edges(out.x_vertices.size(), out.y_vertices.size(), edges);
  return out;
}

CyclicArrangement::CyclicArrangement(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1 || n > kMaxGround) throw DomainError("arrangement length must be in [1, 64]");
  std::uint64_t seen = 0;
  for (int e : order_) {
    if (e < 1 || e > n) throw DomainError("arrangement entry " + std::to_string(e) + " outside [1, n]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if ((seen & bit) != 0) throw DomainError("arrangement repeats " + std::to_string(e));
    seen |= bit;
  }
  std::rotate(order_.begin(), std::find(order_.begin(), order_.end(), 1), order_.end());
}

CyclicArrangement CyclicArrangement::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return CyclicArrangement(std::move(order));
}

bool CyclicArrangement::next() { return std::next_permutation(order_.begin() + 1, order_.end()); }

std::vector<std::uint64_t> CyclicArrangement::window_masks(int k) const {
  const auto n = order_.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) throw DomainError("window length outside [0, n]");
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
      out[i] |= std::uint64_t{1} << (order_[(i + j) % n] - 1);
    }
  }
  return out;
}

std::size_t substrings_in_arrangement(const CyclicArrangement& c, std::span<const KSubset> family,
                                      int k) {
  const auto windows = c.window_masks(k);
  std::size_t count = 0;
  for (const auto& s : family) {
    if (s.size() == k && std::find(windows.begin(), windows.end(), s.mask) != windows.end()) ++count;
  }
  return count;
}

namespace {

void check_arrangement_args(int n, int k, std::span<const KSubset> family) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > kMaxArrangementGround) {
    throw CapacityError("arrangement enumeration limited to n <= " +
                        std::to_string(kMaxArrangementGround) + ", got " + std::to_string(n));
  }
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  for (const auto& s : family) {
    if (s.size() != k || (s.mask >> n) != 0) {
      throw DomainError(s.to_string() + " is not a " + std::to_string(k) + "-subset of [" +
                        std::to_string(n) + "]");
    }
  }
}

// Deduplicated family masks, for set semantics under repeated members.
std::vector<std::uint64_t> family_masks(std::span<const KSubset> family) {
  std::vector<std::uint64_t> masks;
  for (const auto& s : family) masks.push_back(s.mask);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

template <class F>
void for_each_arrangement(int n, int k, std::span<const KSubset> family, F&& fn) {
  const auto masks = family_masks(family);
  CyclicArrangement c = CyclicArrangement::identity(n);
  do {
    std::size_t count = 0;
    for (auto w : c.window_masks(k)) {
      if (std::binary_search(masks.begin(), masks.end(), w)) ++count;
    }
    // With k = n every window is the same set.
    if (k == n) count = std::min<std::size_t>(count, 1);
    fn(c, count);
  } while (c.next());
}

}  // namespace

SubstringMaximum max_substrings(int n, int k, std::span<const KSubset> family) {
  check_arrangement_args(n, k, family);
  SubstringMaximum best{0, CyclicArrangement::identity(n)};
  bool first = true;
  for_each_arrangement(n, k, family, [&](const CyclicArrangement& c, std::size_t count) {
    if (first || count > best.max_count) {
      best = {count, c};
      first = false;
    }
  });
  return best;
}

bool double_count_identity(int n, int k, std::span<const KSubset> family) {
  check_arrangement_args(n, k, family);
  if (k == n) throw DomainError("double counting needs k < n");
  std::uint64_t total = 0;
  for_each_arrangement(n, k, family, [&](const CyclicArrangement&, std::size_t count) { total += count; });
  std::uint64_t factorial_k = 1;
  for (int i = 2; i <= k; ++i) factorial_k *= static_cast<std::uint64_t>(i);
  std::uint64_t factorial_rest = 1;
  for (int i = 2; i <= n - k; ++i) factorial_rest *= static_cast<std::uint64_t>(i);
  return total == family_masks(family).size() * factorial_k * factorial_rest;
}

}  // namespace kneser
