#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kneser {

/// Exact binomial coefficient; C(n,k) = 0 when k > n.
/// Throws ArithmeticError if the value does not fit in 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

/// Independence number of K_{n,k} (Erdos-Ko-Rado): C(n-1, k-1).
std::uint64_t alpha_kneser(int n, int k);

struct Interval {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// alpha <= diss <= 2 alpha, valid for any graph.
Interval sandwich(std::uint64_t alpha);

/// diss(K_{n,k}) >= C(2k,k): K_{2k,k} is an induced perfect matching.
std::uint64_t subgraph_lower(int n, int k);

/// |V \ (N[x] u N[y])| for an edge xy, as the double sum over how many
/// elements a vertex takes from outside x u y.
std::uint64_t edge_nonneighbor_count(int n, int k);

/// Same count by inclusion-exclusion: C(n,k) - 2 C(n-k,k) + C(n-2k,k).
std::uint64_t edge_nonneighbor_count_closed(int n, int k);

/// Upper bound on any dissociation set that contains an edge: 2 + |U|.
std::uint64_t nonindependent_upper(int n, int k);

/// max(alpha, nonindependent_upper): every dissociation set is either
/// independent or contains an edge.
std::uint64_t combined_upper(int n, int k);

/// Smallest n >= 2k from which alpha_kneser(n,k) >= nonindependent_upper(n,k)
/// holds for every n up to the scan cap 10k + 64. Throws SearchFailure if the
/// inequality still fails at the cap.
int n0prime(int k);

/// Lower bound 2k + 2 on the threshold n from which diss = alpha.
int n0_lower(int k);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  std::uint64_t floor() const { return num / den; }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A real-valued bound together with its integer floor.
struct RationalBound {
  Rational raw;
  std::uint64_t value = 0;
};

/// Cyclic-arrangement bound (k+1)/k * C(n-1,k-1); applies when n > 3k - 2.
std::optional<RationalBound> katona_upper_large_r(int n, int k);

/// Cyclic-arrangement bound 2 (rk+2r+k+1) / (k(2r+1)) * C(n-1,k-1) with
/// r = n - 2k; applies when 1 <= r <= k - 2.
std::optional<RationalBound> katona_upper_small_r(int n, int k);

struct ExactValue {
  std::uint64_t value = 0;
  std::string source;
};

/// Known exact diss(K_{n,k}) with the rule that settles it, when one applies.
std::optional<ExactValue> known_exact(int n, int k);

struct NamedBound {
  std::string name;
  std::uint64_t value = 0;
  std::optional<Rational> raw;  // present for floored real-valued bounds
  bool derived = false;         // assembled from a case split, not a closed formula
};

struct BoundReport {
  int n = 0;
  int k = 0;
  int r = 0;
  std::uint64_t alpha = 0;
  std::vector<NamedBound> lower_bounds;
  std::vector<NamedBound> upper_bounds;
  std::vector<std::string> not_applicable;
  std::optional<ExactValue> known_exact;
  std::uint64_t best_lower = 0;
  std::uint64_t best_upper = 0;
  std::string best_upper_source;
};

BoundReport report(int n, int k);

namespace bound_names {
inline constexpr const char* kCenter = "center";
inline constexpr const char* kPerfectMatchingSubgraph = "perfect_matching_subgraph";
inline constexpr const char* kSandwich = "twice_alpha";
inline constexpr const char* kCaseSplit = "case_split";
inline constexpr const char* kKatonaLargeR = "cyclic_large_r";
inline constexpr const char* kKatonaSmallR = "cyclic_small_r";

inline constexpr const char* kExactK2 = "k2_formula";
inline constexpr const char* kExactK3 = "k3_threshold";
inline constexpr const char* kExactHalf = "perfect_matching_n_eq_2k";
inline constexpr const char* kExactOdd = "odd_graph";
inline constexpr const char* kExactClosure = "bound_closure";
}  // namespace bound_names

}  // namespace kneser
