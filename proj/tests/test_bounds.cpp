#include <algorithm>

#include "doctest.h"
#include "kneser/bounds.hpp"
#include "kneser/errors.hpp"
#include "kneser/kneser_core.hpp"
#include "oracles.hpp"

#ifdef KNESER_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_int.hpp>
#endif

using namespace kneser;

TEST_CASE("binom") {
  CHECK(binom(6, 3) == 20);
  CHECK(binom(1, 2) == 0);
  CHECK(binom(20, 10) == oracle::pascal(20, 10));
  CHECK(binom(20, 10) == 184756);
  CHECK(binom(0, 0) == 1);
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n + 1; ++k) CHECK(binom(n, k) == oracle::pascal(n, k));
  }
  CHECK_THROWS_AS(binom(100, 50), ArithmeticError);
  CHECK(binom(100, 2) == 4950);
}

TEST_CASE("alpha, sandwich, subgraph lower bound") {
  CHECK(alpha_kneser(5, 2) == 4);
  CHECK(alpha_kneser(8, 3) == 21);
  CHECK(alpha_kneser(6, 3) == 10);
  CHECK_THROWS_AS(alpha_kneser(5, 3), DomainError);

  CHECK(sandwich(4) == Interval{4, 8});
  CHECK(sandwich(21) == Interval{21, 42});
  CHECK(sandwich(0) == Interval{0, 0});

  CHECK(subgraph_lower(5, 2) == 6);
  CHECK(subgraph_lower(7, 3) == 20);
  CHECK(subgraph_lower(100, 2) == 6);
  CHECK(alpha_kneser(100, 2) == 99);
  CHECK(report(100, 2).best_lower == 99);
}

TEST_CASE("edge non-neighbour count") {
  CHECK(edge_nonneighbor_count(5, 2) == 4);
  CHECK(edge_nonneighbor_count(8, 3) == 36);
  CHECK(edge_nonneighbor_count(6, 3) == 18);
  CHECK(edge_nonneighbor_count_closed(6, 3) == 20 - 2 * 1 + 0);
  CHECK_THROWS_AS(edge_nonneighbor_count(5, 1), DomainError);
}

TEST_CASE("sum formula = closed form = brute force for 2<=k<=6, 2k<=n<=2k+12") {
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2 * k; n <= 2 * k + 12; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const std::uint64_t sum = edge_nonneighbor_count(n, k);
      CHECK(sum == edge_nonneighbor_count_closed(n, k));
      if (oracle::pascal(n, k) <= 100'000) {
        const std::uint64_t x = (std::uint64_t{1} << k) - 1;
        const std::uint64_t y = x << k;
        CHECK(sum == oracle::nonneighbor_count(n, k, x, y));
      }
    }
  }
}

TEST_CASE("non-independent and combined upper bounds") {
  for (int n = 5; n <= 40; ++n) CHECK(nonindependent_upper(n, 2) == 6);
  CHECK(nonindependent_upper(8, 3) == 38);
  CHECK(nonindependent_upper(17, 3) == 119);
  CHECK(alpha_kneser(17, 3) == 120);

  CHECK(combined_upper(9, 2) == 8);
  CHECK(combined_upper(5, 2) == 6);
  CHECK(combined_upper(9, 3) == 47);
}

TEST_CASE("n0prime") {
  CHECK(n0prime(2) == 7);
  CHECK(n0prime(3) == 17);
  // k = 4: ascending scan in the test with Pascal-triangle binomials.
  auto holds = [](int n, int k) {
    const auto alpha = oracle::pascal(n - 1, k - 1);
    const auto u = oracle::pascal(n, k) - 2 * oracle::pascal(n - k, k) + oracle::pascal(n - 2 * k, k);
    return alpha >= 2 + u;
  };
  int expect = 0;
  for (int n = 8; n <= 104; ++n) {
    if (!holds(n, 4)) expect = n + 1;
  }
  CHECK(n0prime(4) == expect);
  CHECK(holds(expect, 4));
  CHECK_FALSE(holds(expect - 1, 4));
  CHECK_THROWS_AS(n0prime(1), DomainError);
}

TEST_CASE("cyclic-arrangement bounds") {
  REQUIRE(katona_upper_large_r(7, 2));
  CHECK(katona_upper_large_r(7, 2)->value == 9);
  CHECK(katona_upper_large_r(8, 3)->value == 28);
  CHECK(katona_upper_large_r(5, 2)->value == 6);
  CHECK(katona_upper_large_r(7, 3) == std::nullopt);
  CHECK(katona_upper_large_r(9, 3)->raw == Rational{112, 3});

  REQUIRE(katona_upper_small_r(7, 3));
  CHECK(katona_upper_small_r(7, 3)->value == 30);
  CHECK(katona_upper_small_r(10, 4)->value == 142);
  CHECK(katona_upper_small_r(10, 4)->raw.to_string() == "714/5");
  CHECK(katona_upper_small_r(9, 3) == std::nullopt);
  CHECK(katona_upper_small_r(8, 4) == std::nullopt);

  for (int n = 5; n <= 40; ++n) {
    CHECK(katona_upper_large_r(n, 2)->value >= std::max<std::uint64_t>(n - 1, 6));
  }
}

TEST_CASE("known exact values") {
  auto e = known_exact(12, 2);
  REQUIRE(e);
  CHECK(e->value == 11);
  CHECK(e->source == bound_names::kExactK2);

  e = known_exact(9, 3);
  REQUIRE(e);
  CHECK(e->value == 28);
  CHECK(e->source == bound_names::kExactK3);

  e = known_exact(9, 4);
  REQUIRE(e);
  CHECK(e->value == 70);
  CHECK(e->source == bound_names::kExactOdd);

  e = known_exact(8, 4);
  REQUIRE(e);
  CHECK(e->value == 70);

  CHECK(known_exact(12, 5) == std::nullopt);
  CHECK(known_exact(7, 2)->value == 6);
  CHECK(known_exact(5, 2)->value == 6);
}

TEST_CASE("n0_lower") {
  CHECK(n0_lower(3) == 8);
  CHECK(n0_lower(2) == 6);
  CHECK(n0_lower(10) == 22);
}

TEST_CASE("report") {
  SUBCASE("(7,3)") {
    const BoundReport r = report(7, 3);
    CHECK(r.r == 1);
    CHECK(r.alpha == 15);
    CHECK(r.best_lower == 20);
    // twice_alpha 30, cyclic_small_r 30, case_split max(15, 2 + 27) = 29
    CHECK(r.best_upper == 29);
    CHECK(r.best_upper_source == bound_names::kCaseSplit);
    REQUIRE(r.known_exact);
    CHECK(r.known_exact->value == 20);
    CHECK(r.known_exact->source == bound_names::kExactOdd);
  }
  SUBCASE("(8,3)") {
    const BoundReport r = report(8, 3);
    REQUIRE(r.known_exact);
    CHECK(r.known_exact->value == 21);
    CHECK(r.best_lower <= 21);
    CHECK(21 <= r.best_upper);
  }
  SUBCASE("(6,2)") {
    const BoundReport r = report(6, 2);
    REQUIRE(r.known_exact);
    CHECK(r.known_exact->value == 6);
    CHECK(r.best_lower >= 6);
  }
  SUBCASE("(12,5) has no exact value") {
    const BoundReport r = report(12, 5);
    CHECK_FALSE(r.known_exact);
    CHECK(r.best_lower == 330);
    CHECK(std::find(r.not_applicable.begin(), r.not_applicable.end(), bound_names::kKatonaLargeR) !=
          r.not_applicable.end());
  }
}

TEST_CASE("report invariants and soundness wherever an exact value is known") {
  for (int k = 2; k <= 8; ++k) {
    for (int n = 2 * k; n <= 2 * k + 30; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const BoundReport r = report(n, k);
      CHECK(r.alpha == binom(n - 1, k - 1));
      CHECK(r.best_lower <= r.best_upper);
      for (const auto& lo : r.lower_bounds) {
        for (const auto& up : r.upper_bounds) CHECK(lo.value <= up.value);
      }
      if (r.known_exact) {
        const auto x = r.known_exact->value;
        CHECK(r.best_lower <= x);
        CHECK(x <= r.best_upper);
        for (const auto& lo : r.lower_bounds) CHECK(lo.value <= x);
        for (const auto& up : r.upper_bounds) CHECK(x <= up.value);
      }
    }
  }
}

#ifdef KNESER_HAVE_BOOST_MP
TEST_CASE("big-integer recomputation matches every bound") {
  using boost::multiprecision::cpp_int;
  auto C = [](int n, int k) -> cpp_int {
    if (k < 0 || k > n) return 0;
    cpp_int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int k = 2; k <= 7; ++k) {
    for (int n = 2 * k; n <= 2 * k + 25; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const cpp_int alpha = C(n - 1, k - 1);
      CHECK(cpp_int(alpha_kneser(n, k)) == alpha);
      cpp_int sum = 0;
      for (int i = 0; i <= k - 2; ++i) {
        cpp_int inner = 0;
        for (int j = 1; j <= k - i - 1; ++j) inner += C(k, j) * C(k, k - j - i);
        sum += C(n - 2 * k, i) * inner;
      }
      CHECK(cpp_int(edge_nonneighbor_count(n, k)) == sum);
      CHECK(cpp_int(combined_upper(n, k)) == (alpha > sum + 2 ? alpha : sum + 2));
      const int r = n - 2 * k;
      if (auto b = katona_upper_large_r(n, k)) {
        CHECK(cpp_int(b->value) == (k + 1) * alpha / k);
      }
      if (auto b = katona_upper_small_r(n, k)) {
        CHECK(cpp_int(b->value) == 2 * (r * k + 2 * r + k + 1) * alpha / (k * (2 * r + 1)));
      }
    }
  }
}
#endif
