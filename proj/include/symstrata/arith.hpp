#pragma once

// Exact F_q point counts of the strata w_lambda(P^1).
//
// Two independent counters are provided. count_brute enumerates every
// effective divisor of degree m on the line and reads off its geometric
// multiplicity type from the factorization type of a polynomial. count_fast
// distributes closed points (counted by the necklace formula) among the
// multiplicity groups of lambda. The two must agree wherever both run.

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symstrata/qpoly.hpp"
#include "symstrata/series.hpp"

namespace symstrata {

/// Multiset of positive integers, stored ascending.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// Parses "1,1,2,2"; whitespace around entries is ignored.
  static Partition parse(const std::string& csv);
  /// 1^n 2^2.
  static Partition w1n22(int n);
  /// 1^n 2 3.
  static Partition w1n23(int n);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// part value m -> a_m, the number of parts equal to m.
  std::map<int, int> multiplicities() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of m, each ascending.
std::vector<Partition> partitions_of(int m);

enum class CountMethod { brute, fast, strata };
std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

struct CountRecord {
  Partition lambda;
  std::int64_t q = 0;
  std::int64_t count = 0;
  CountMethod method = CountMethod::fast;
  bool operator==(const CountRecord&) const = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class InterpolationError : public std::runtime_error {
 public:
  explicit InterpolationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;

/// Process-wide work counters, read by the CLI cache tests.
struct OperationCounters {
  std::uint64_t brute_divisors = 0;
  std::uint64_t fast_evaluations = 0;
};
OperationCounters operation_counters();

bool is_prime(std::int64_t n);
std::int64_t next_prime(std::int64_t n);

/// Number of degree-d closed points of P^1 over F_q.
std::int64_t closed_point_count(int d, std::int64_t q);

/// Geometric multiplicity type of every effective degree-m divisor of P^1
/// over F_q, tallied. The divisor (f, j) is a monic f of degree m - j plus
/// multiplicity j at infinity.
std::map<Partition, std::int64_t> brute_type_histogram(
    int m, std::int64_t q, std::uint64_t budget = kDefaultBruteBudget);

CountRecord count_brute(const Partition& lambda, std::int64_t q,
                        std::uint64_t budget = kDefaultBruteBudget);
CountRecord count_fast(const Partition& lambda, std::int64_t q);

using ZetaSeries = TruncatedSeries<QPoly>;

/// (degree, count): `count` closed points of that degree are removed.
using RemovedPoints = std::vector<std::pair<int, int>>;

/// Z(t) = prod (1 - t^deg)^count / ((1 - t)(1 - q t)), q symbolic.
ZetaSeries zeta_complement(const RemovedPoints& removed, int order);

/// Coefficient of t^n in Z(t) / Z(t^2): squarefree degree-n divisors
/// avoiding the removed points, as a polynomial in q.
QPoly uconf_polynomial(const RemovedPoints& removed, int n);
std::int64_t uconf_count(const RemovedPoints& removed, int n, std::int64_t q);

/// Fibration count of w_{1^n 2^2}: split base divisors contribute
/// UConf_n(P^1 minus two rational points), nonsplit ones UConf_n(P^1 minus a
/// degree-2 point).
QPoly strata_w1n22_polynomial(int n);
CountRecord count_strata_w1n22(int n, std::int64_t q);

/// Lagrange interpolation of count_fast(lambda, .) through the primes.
/// Requires at least size(lambda) + 1 distinct primes. Verifies integral
/// coefficients, degree equal to the number of parts, and agreement at the
/// held-out prime (default: the next prime after the largest given).
QPoly interpolate(const Partition& lambda, const std::vector<std::int64_t>& primes,
                  std::optional<std::int64_t> held_out = std::nullopt);

/// The first size(lambda) + 1 primes.
std::vector<std::int64_t> default_interpolation_primes(const Partition& lambda);

}  // namespace symstrata
