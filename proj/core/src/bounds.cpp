#include "kneser/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

__extension__ typedef unsigned __int128 U128;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("64-bit overflow in multiplication");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("64-bit overflow in addition");
  return out;
}

std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw ArithmeticError("unexpected negative intermediate");
  return a - b;
}

void require_kneser(int n, int k, int min_k) {
  if (k < min_k || n < 2 * k) {
    throw DomainError("bound needs n >= 2k and k >= " + std::to_string(min_k) + ", got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
}

std::uint64_t u(int x) { return static_cast<std::uint64_t>(x); }

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

}  // namespace

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // C(n-k+i, i) grows with i, so an overflowing intermediate means the result overflows.
  U128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw ArithmeticError("C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t alpha_kneser(int n, int k) {
  require_kneser(n, k, 1);
  return binom(u(n - 1), u(k - 1));
}

Interval sandwich(std::uint64_t alpha) { return {alpha, checked_mul(2, alpha)}; }

std::uint64_t subgraph_lower(int n, int k) {
  require_kneser(n, k, 1);
  return binom(u(2 * k), u(k));
}

std::uint64_t edge_nonneighbor_count(int n, int k) {
  require_kneser(n, k, 2);
  std::uint64_t total = 0;
  for (int i = 0; i <= k - 2; ++i) {
    std::uint64_t inner = 0;
    for (int j = 1; j <= k - i - 1; ++j) {
      inner = checked_add(inner, checked_mul(binom(u(k), u(j)), binom(u(k), u(k - j - i))));
    }
    total = checked_add(total, checked_mul(binom(u(n - 2 * k), u(i)), inner));
  }
  return total;
}

std::uint64_t edge_nonneighbor_count_closed(int n, int k) {
  require_kneser(n, k, 2);
  const std::uint64_t plus = checked_add(binom(u(n), u(k)), binom(u(n - 2 * k), u(k)));
  return checked_sub(plus, checked_mul(2, binom(u(n - k), u(k))));
}

std::uint64_t nonindependent_upper(int n, int k) {
  return checked_add(2, edge_nonneighbor_count(n, k));
}

std::uint64_t combined_upper(int n, int k) {
  return std::max(alpha_kneser(n, k), nonindependent_upper(n, k));
}

int n0prime(int k) {
  if (k < 2) throw DomainError("n0prime needs k >= 2, got " + std::to_string(k));
  const int cap = 10 * k + 64;
  int last_failure = 2 * k - 1;
  for (int n = 2 * k; n <= cap; ++n) {
    if (alpha_kneser(n, k) < nonindependent_upper(n, k)) last_failure = n;
  }
  if (last_failure == cap) {
    throw SearchFailure("alpha >= 2 + |U| still fails at the scan cap n=" + std::to_string(cap));
  }
  return last_failure + 1;
}

int n0_lower(int k) {
  if (k < 2) throw DomainError("n0_lower needs k >= 2, got " + std::to_string(k));
  return 2 * k + 2;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::optional<RationalBound> katona_upper_large_r(int n, int k) {
  require_kneser(n, k, 1);
  if (n <= 3 * k - 2) return std::nullopt;
  const Rational raw = make_rational(checked_mul(u(k + 1), alpha_kneser(n, k)), u(k));
  return RationalBound{raw, raw.floor()};
}

std::optional<RationalBound> katona_upper_small_r(int n, int k) {
  require_kneser(n, k, 1);
  const int r = n - 2 * k;
  if (r < 1 || r > k - 2) return std::nullopt;
  const std::uint64_t factor = u(r * k + 2 * r + k + 1);
  const Rational raw =
      make_rational(checked_mul(checked_mul(2, factor), alpha_kneser(n, k)), u(k) * u(2 * r + 1));
  return RationalBound{raw, raw.floor()};
}

namespace {

struct Assembled {
  std::vector<NamedBound> lower;
  std::vector<NamedBound> upper;
  std::vector<std::string> not_applicable;
  std::uint64_t best_lower = 0;
  std::uint64_t best_upper = std::numeric_limits<std::uint64_t>::max();
  std::string best_upper_source;
};

Assembled assemble(int n, int k) {
  using namespace bound_names;
  Assembled a;
  const std::uint64_t alpha = alpha_kneser(n, k);
  a.lower.push_back({kCenter, alpha, std::nullopt, false});
  a.lower.push_back({kPerfectMatchingSubgraph, subgraph_lower(n, k), std::nullopt, false});

  a.upper.push_back({kSandwich, sandwich(alpha).upper, std::nullopt, false});
  if (auto b = katona_upper_large_r(n, k)) {
    a.upper.push_back({kKatonaLargeR, b->value, b->raw, false});
  } else {
    a.not_applicable.emplace_back(kKatonaLargeR);
  }
  if (auto b = katona_upper_small_r(n, k)) {
    a.upper.push_back({kKatonaSmallR, b->value, b->raw, false});
  } else {
    a.not_applicable.emplace_back(kKatonaSmallR);
  }
  a.upper.push_back({kCaseSplit, combined_upper(n, k), std::nullopt, true});

  for (const auto& b : a.lower) a.best_lower = std::max(a.best_lower, b.value);
  for (const auto& b : a.upper) {
    if (b.value < a.best_upper) {
      a.best_upper = b.value;
      a.best_upper_source = b.name;
    }
  }
  return a;
}

}  // namespace

std::optional<ExactValue> known_exact(int n, int k) {
  using namespace bound_names;
  require_kneser(n, k, 2);
  if (n == 2 * k) return ExactValue{binom(u(n), u(k)), kExactHalf};
  if (k == 2) return ExactValue{std::max<std::uint64_t>(u(n - 1), 6), kExactK2};
  if (n == 2 * k + 1) return ExactValue{binom(u(2 * k), u(k)), kExactOdd};
  if (k == 3 && n >= 8) return ExactValue{alpha_kneser(n, k), kExactK3};
  const Assembled a = assemble(n, k);
  if (a.best_lower == a.best_upper) return ExactValue{a.best_lower, kExactClosure};
  return std::nullopt;
}

BoundReport report(int n, int k) {
  require_kneser(n, k, 2);
  Assembled a = assemble(n, k);
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.r = n - 2 * k;
  rep.alpha = alpha_kneser(n, k);
  rep.lower_bounds = std::move(a.lower);
  rep.upper_bounds = std::move(a.upper);
  rep.not_applicable = std::move(a.not_applicable);
  rep.best_lower = a.best_lower;
  rep.best_upper = a.best_upper;
  rep.best_upper_source = std::move(a.best_upper_source);
  rep.known_exact = known_exact(n, k);
  return rep;
}

}  // namespace kneser
