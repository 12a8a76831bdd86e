#include "kneser/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "kneser/bounds.hpp"
#include "kneser/errors.hpp"

namespace kneser {

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool none() const {
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits& operator-=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    return W * 64;
  }
  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      }
    }
  }
};

struct RootCap {
  std::size_t value = 0;
  std::string name;
};

struct SearchOptions {
  std::optional<std::size_t> fixed_vertex;
  std::optional<RootCap> root_cap;
  std::optional<VertexSet> seed;
};

// Incumbent and budget shared by all workers. The incumbent size only ever
// increases; a witness is replaced only on strict improvement.
class Shared {
 public:
  Shared(const SearchBudget& budget, std::size_t order)
      : max_nodes_(budget.max_nodes), witness_(order) {
    if (budget.max_time) deadline_ = start_ + *budget.max_time;
  }

  std::size_t best() const { return best_.load(std::memory_order_relaxed); }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }

  template <class Fill>
  void offer(std::size_t size, Fill&& fill) {
    if (size <= best()) return;
    std::lock_guard lock(mu_);
    if (size <= best_.load(std::memory_order_relaxed)) return;
    witness_ = VertexSet(witness_.universe());
    fill(witness_);
    best_.store(size, std::memory_order_relaxed);
    if (target_ && size >= *target_) stop_.store(true, std::memory_order_relaxed);
  }

  // Called in batches; returns false once any budget is exhausted.
  bool charge(std::uint64_t nodes) {
    const std::uint64_t total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if ((max_nodes_ && total > *max_nodes_) || (deadline_ && Clock::now() >= *deadline_)) {
      exhausted_.store(true, std::memory_order_relaxed);
      stop_.store(true, std::memory_order_relaxed);
    }
    return !stopped();
  }

  // Final accounting after the search has ended; never flags exhaustion.
  void settle(std::uint64_t nodes) { nodes_.fetch_add(nodes, std::memory_order_relaxed); }

  std::uint64_t batch() const { return max_nodes_ && *max_nodes_ < 4096 ? 1 : 256; }

  void set_target(std::size_t target) { target_ = target; }
  void finish() { stop_.store(true, std::memory_order_relaxed); }

  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }
  VertexSet witness() const {
    std::lock_guard lock(mu_);
    return witness_;
  }
  Clock::time_point start() const { return start_; }

 private:
  Clock::time_point start_ = Clock::now();
  std::optional<Clock::time_point> deadline_;
  std::optional<std::uint64_t> max_nodes_;
  std::optional<std::size_t> target_;
  std::atomic<std::size_t> best_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> exhausted_{false};
  mutable std::mutex mu_;
  VertexSet witness_;
};

// Branch-and-bound over (included, undecided) pairs. Every undecided vertex
// can be added to the included set without violating the degree bound; the
// propagation in include() keeps that invariant.
template <std::size_t W>
class Searcher {
 public:
  using B = Bits<W>;

  struct Node {
    B included;
    B undecided;
    std::size_t size = 0;
  };

  Searcher(const std::vector<B>& adj, std::size_t order, int d, bool use_cliques, Shared& shared)
      : adj_(adj), order_(order), d_(static_cast<std::size_t>(d)), use_cliques_(use_cliques),
        shared_(shared), batch_(shared.batch()) {
    values_.reserve(order);
  }

  ~Searcher() { flush(); }

  void flush() {
    if (pending_ != 0) shared_.settle(pending_);
    pending_ = 0;
  }

  void include(std::size_t v, Node& node) const {
    node.undecided.reset(v);
    node.included.set(v);
    ++node.size;
    const B inc_nbrs = adj_[v] & node.included;
    inc_nbrs.for_each([&](std::size_t w) {
      if (adj_[w].and_count(node.included) == d_) node.undecided -= adj_[w];
    });
    if (inc_nbrs.count() == d_) node.undecided -= adj_[v];
    if (d_ > 0) {
      (adj_[v] & node.undecided).for_each([&](std::size_t u) {
        if (adj_[u].and_count(node.included) > d_) node.undecided.reset(u);
      });
    }
  }

  // A vertex with no included neighbour and at most one undecided neighbour
  // belongs to some optimal completion.
  void reduce(Node& node) const {
    bool changed = true;
    while (changed) {
      changed = false;
      B scan = node.undecided;
      scan.for_each([&](std::size_t u) {
        if (!node.undecided.test(u)) return;
        const B& nu = adj_[u];
        if (nu.and_count(node.included) != 0) return;
        if (nu.and_count(node.undecided) <= 1) {
          include(u, node);
          changed = true;
        }
      });
    }
  }

  struct Estimate {
    std::size_t value;
    const char* source;
  };

  // Upper bound on how many undecided vertices can still be added.
  Estimate upper(const Node& node) {
    const B& inc = node.included;
    const B& und = node.undecided;
    Estimate best{und.count(), "remaining_count"};

    // Global edge count: sum over added t of (2 deg_R(t) + |N(t) & I| - d)
    // cannot exceed the degree sum of the undecided subgraph.
    {
      values_.clear();
      std::int64_t total = 0;
      und.for_each([&](std::size_t t) {
        const auto deg = static_cast<std::int64_t>(adj_[t].and_count(und));
        total += deg;
        values_.push_back(2 * deg + static_cast<std::int64_t>(adj_[t].and_count(inc)) -
                          static_cast<std::int64_t>(d_));
      });
      const std::size_t v = prefix_fit(total);
      if (v < best.value) best = {v, "degree_count"};
    }

    // Each included vertex w admits at most d - deg_I(w) more neighbours;
    // charge its undecided neighbourhood to it, then bound the rest.
    {
      B rest = und;
      std::size_t sum = 0;
      inc.for_each([&](std::size_t w) {
        const B part = adj_[w] & rest;
        const std::size_t c = part.count();
        if (c == 0) return;
        const std::size_t cap = d_ - adj_[w].and_count(inc);
        sum += std::min(cap, c);
        rest -= part;
      });
      sum += rest_bound(rest);
      if (sum < best.value) best = {sum, "capacity_groups"};
    }
    return best;
  }

  std::size_t rest_bound(const B& rest) {
    std::size_t best = rest.count();
    values_.clear();
    std::int64_t total = 0;
    rest.for_each([&](std::size_t t) {
      const auto deg = static_cast<std::int64_t>(adj_[t].and_count(rest));
      total += deg;
      values_.push_back(2 * deg - static_cast<std::int64_t>(d_));
    });
    best = std::min(best, prefix_fit(total));
    if (use_cliques_) best = std::min(best, clique_cover(rest));
    return best;
  }

  // Greedy clique partition; a clique holds at most d + 1 chosen vertices.
  std::size_t clique_cover(B left) const {
    std::size_t sum = 0;
    while (!left.none()) {
      const std::size_t v = left.first();
      left.reset(v);
      std::size_t size = 1;
      B cand = adj_[v] & left;
      while (!cand.none()) {
        const std::size_t u = cand.first();
        left.reset(u);
        ++size;
        cand = cand & adj_[u];
      }
      sum += std::min(size, d_ + 1);
    }
    return sum;
  }

  std::size_t prefix_fit(std::int64_t budget) {
    std::sort(values_.begin(), values_.end());
    std::int64_t acc = 0;
    std::size_t fit = 0;
    for (auto v : values_) {
      if (acc + v > budget) break;
      acc += v;
      ++fit;
    }
    return fit;
  }

  std::size_t choose(const B& und) const {
    std::size_t best_v = order_;
    std::size_t best_deg = 0;
    und.for_each([&](std::size_t v) {
      const std::size_t deg = adj_[v].and_count(und);
      if (best_v == order_ || deg > best_deg) {
        best_v = v;
        best_deg = deg;
      }
    });
    return best_v;
  }

  void offer(const Node& node) {
    shared_.offer(node.size, [&](VertexSet& out) { node.included.for_each([&](std::size_t v) { out.insert(v); }); });
  }

  bool tick() {
    if (++pending_ >= batch_ || !charged_) {
      charged_ = true;
      const std::uint64_t p = pending_;
      pending_ = 0;
      return shared_.charge(p);
    }
    return !shared_.stopped();
  }

  // Processes one node: reductions, incumbent update, pruning. Returns the
  // branching vertex, or nullopt if the node is closed.
  std::optional<std::size_t> open(Node& node, const char** pruned_by = nullptr) {
    reduce(node);
    offer(node);
    if (node.undecided.none()) return std::nullopt;
    const Estimate est = upper(node);
    if (node.size + est.value <= shared_.best()) {
      if (pruned_by != nullptr) *pruned_by = est.source;
      return std::nullopt;
    }
    return choose(node.undecided);
  }

  void dfs(Node node) {
    while (true) {
      if (!tick()) return;
      const auto v = open(node);
      if (!v) return;
      Node with = node;
      include(*v, with);
      dfs(with);
      if (shared_.stopped()) return;
      node.undecided.reset(*v);
    }
  }

  Node root() const { return Node{}; }

  const std::vector<B>& adj_;
  std::size_t order_;
  std::size_t d_;
  bool use_cliques_;
  Shared& shared_;
  std::uint64_t batch_;
  std::uint64_t pending_ = 0;
  bool charged_ = false;
  std::vector<std::int64_t> values_;
};

bool has_triangle(const GenericGraph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    bool found = false;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (!found && v > u && g.neighbors(u).intersects(g.neighbors(v))) found = true;
    });
    if (found) return true;
  }
  return false;
}

template <std::size_t W>
SolveResult run_search(const GenericGraph& g, int d, const SearchBudget& budget,
                       const SearchOptions& opts) {
  using S = Searcher<W>;
  using B = typename S::B;
  const std::size_t order = g.order();
  std::vector<B> adj(order);
  for (std::size_t v = 0; v < order; ++v) g.neighbors(v).for_each([&](std::size_t u) { adj[v].set(u); });

  Shared shared(budget, order);
  SolveResult result;
  if (opts.seed) {
    const VertexSet& seed = *opts.seed;
    shared.offer(seed.count(), [&](VertexSet& out) { out = seed; });
  }

  const bool cliques = d == 0 || has_triangle(g);
  typename S::Node root;
  for (std::size_t v = 0; v < order; ++v) root.undecided.set(v);

  bool closed_by_cap = false;
  if (opts.root_cap) {
    shared.set_target(opts.root_cap->value);
    if (shared.best() >= opts.root_cap->value) {
      closed_by_cap = true;
      result.bound_source = opts.root_cap->name;
    }
  }

  if (!closed_by_cap) {
    S main(adj, order, d, cliques, shared);
    if (opts.fixed_vertex) main.include(*opts.fixed_vertex, root);

    const char* pruned_by = nullptr;
    main.tick();
    const auto first = main.open(root, &pruned_by);
    if (!first) {
      if (pruned_by != nullptr) result.bound_source = pruned_by;
    } else if (budget.thread_count <= 1) {
      typename S::Node with = root;
      main.include(*first, with);
      main.dfs(with);
      if (!shared.stopped()) {
        root.undecided.reset(*first);
        main.dfs(root);
      }
    } else {
      // Breadth-first split into a frontier, then workers drain it.
      std::deque<typename S::Node> frontier;
      {
        typename S::Node with = root;
        main.include(*first, with);
        frontier.push_back(with);
        root.undecided.reset(*first);
        frontier.push_back(root);
      }
      const std::size_t target = 16 * static_cast<std::size_t>(budget.thread_count);
      std::vector<typename S::Node> tasks;
      while (!frontier.empty() && frontier.size() + tasks.size() < target && !shared.stopped()) {
        typename S::Node node = frontier.front();
        frontier.pop_front();
        main.tick();
        const auto v = main.open(node);
        if (!v) continue;
        typename S::Node with = node;
        main.include(*v, with);
        frontier.push_back(with);
        node.undecided.reset(*v);
        frontier.push_back(node);
      }
      tasks.insert(tasks.end(), frontier.begin(), frontier.end());
      main.flush();

      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (unsigned t = 0; t < budget.thread_count; ++t) {
        workers.emplace_back([&] {
          S worker(adj, order, d, cliques, shared);
          while (!shared.stopped()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            worker.dfs(tasks[i]);
          }
          worker.flush();
        });
      }
      for (auto& w : workers) w.join();
    }
    main.flush();
  }

  result.best_size = shared.best();
  result.witness = shared.witness();
  result.optimal = !shared.exhausted();
  result.nodes_explored = shared.nodes();
  result.wall_time = Clock::now() - shared.start();
  return result;
}

SolveResult dispatch(const GenericGraph& g, int d, const SearchBudget& budget,
                     const SearchOptions& opts) {
  if (d < 0) throw DomainError("degree bound d must be non-negative");
  if (budget.thread_count < 1) throw DomainError("thread_count must be at least 1");
  const std::size_t n = g.order();
  if (n <= 64) return run_search<1>(g, d, budget, opts);
  if (n <= 128) return run_search<2>(g, d, budget, opts);
  if (n <= 256) return run_search<4>(g, d, budget, opts);
  if (n <= 512) return run_search<8>(g, d, budget, opts);
  if (n <= 1024) return run_search<16>(g, d, budget, opts);
  if (n <= kMaxSolverOrder) return run_search<64>(g, d, budget, opts);
  throw CapacityError("solver supports at most " + std::to_string(kMaxSolverOrder) +
                      " vertices, got " + std::to_string(n));
}

}  // namespace

SolveResult solve(const GenericGraph& g, int d, const SearchBudget& budget) {
  return dispatch(g, d, budget, {});
}

SolveResult solve_kneser(const KneserGraph& g, int d, const SearchBudget& budget) {
  SearchOptions opts;
  if (g.order() > 0) opts.fixed_vertex = 0;
  if (g.k() >= 2) {
    const Certificate seed = d == 0 ? center(g, 1) : heuristic_lower(g.n(), g.k());
    opts.seed = seed.to_vertex_set(g);
    if (d <= 1) {
      // diss bounds also cap the independence number.
      const BoundReport rep = report(g.n(), g.k());
      opts.root_cap = RootCap{static_cast<std::size_t>(rep.best_upper), rep.best_upper_source};
    }
  }
  return dispatch(g.graph(), d, budget, opts);
}

SolveResult solve_kneser(int n, int k, int d, const SearchBudget& budget) {
  return solve_kneser(build_kneser(n, k), d, budget);
}

std::size_t brute_force(const GenericGraph& g, int d, std::size_t order_cap) {
  if (d < 0) throw DomainError("degree bound d must be non-negative");
  const std::size_t n = g.order();
  if (n > order_cap || n > 64) {
    throw CapacityError("brute force limited to " + std::to_string(std::min<std::size_t>(order_cap, 64)) +
                        " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) g.neighbors(v).for_each([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });
  const auto limit = static_cast<unsigned>(d);
  std::size_t best = 0;

  // Walk every subset in index order; a branch dies as soon as adding a vertex
  // would push it or an already-chosen neighbour above degree d.
  std::function<void(std::size_t, std::uint64_t, std::size_t)> walk =
      [&](std::size_t v, std::uint64_t chosen, std::size_t size) {
        if (v == n) {
          best = std::max(best, size);
          return;
        }
        walk(v + 1, chosen, size);
        const std::uint64_t nb = adj[v] & chosen;
        if (static_cast<unsigned>(std::popcount(nb)) > limit) return;
        for (std::uint64_t x = nb; x != 0; x &= x - 1) {
          const auto w = static_cast<std::size_t>(std::countr_zero(x));
          if (static_cast<unsigned>(std::popcount(adj[w] & chosen)) >= limit) return;
        }
        walk(v + 1, chosen | (std::uint64_t{1} << v), size + 1);
      };
  walk(0, 0, 0);
  return best;
}

Certificate heuristic_lower(int n, int k) {
  if (k < 2 || n < 2 * k) {
    throw DomainError("heuristic_lower needs n >= 2k >= 4, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  Certificate best{n, k, 1, {}, Provenance::heuristic};
  auto consider = [&](std::vector<KSubset> members) {
    if (members.size() > best.members.size()) {
      std::sort(members.begin(), members.end());
      best.members = std::move(members);
    }
  };
  if (k == 2) {
    const int pairs[6][2] = {{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    std::vector<KSubset> six;
    for (const auto& p : pairs) six.push_back(KSubset::from_elements(n, p));
    consider(std::move(six));
  }
  {
    std::vector<KSubset> low;
    for (KSubset s : enumerate_k_subsets(2 * k, k)) {
      s.ground_n = n;
      low.push_back(s);
    }
    consider(std::move(low));
  }
  {
    std::vector<KSubset> star;
    for (KSubset s : enumerate_k_subsets(n - 1, k - 1)) {
      // shift elements up by one and add element 1
      star.push_back(KSubset{(s.mask << 1) | 1U, n});
    }
    consider(std::move(star));
  }
  return best;
}

Psi3Result psi3(const GenericGraph& g, const SearchBudget& budget) {
  const SolveResult r = solve(g, 1, budget);
  return {g.order() - r.best_size, r.optimal};
}

}  // namespace kneser
