#include "symstrata/arith.hpp"

#include <algorithm>
#include <sstream>

#include "symstrata/fp_poly.hpp"

namespace symstrata {

namespace {

std::atomic<std::uint64_t> g_brute_divisors{0};
std::atomic<std::uint64_t> g_fast_evaluations{0};

void require_prime(std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
}

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

BigInt ipow(std::int64_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int mobius(int n) {
  int result = 1;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt falling(const BigInt& n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

// All maps degree -> count with sum(degree * count) == total.
void degree_splits(int total, int max_degree, std::map<int, int>& current,
                   std::vector<std::map<int, int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int d = std::min(total, max_degree); d >= 1; --d) {
    ++current[d];
    degree_splits(total - d, d, current, out);
    if (--current[d] == 0) current.erase(d);
  }
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty partition entry in '" + csv + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + csv + "'");
    }
    if (used != item.size() || value <= 0) {
      throw std::invalid_argument("malformed partition '" + csv + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

Partition Partition::w1n22(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<int> parts(n, 1);
  parts.push_back(2);
  parts.push_back(2);
  return Partition(std::move(parts));
}

Partition Partition::w1n23(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<int> parts(n, 1);
  parts.push_back(2);
  parts.push_back(3);
  return Partition(std::move(parts));
}

int Partition::total() const {
  int t = 0;
  for (int p : parts_) t += p;
  return t;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> out;
  for (int p : parts_) ++out[p];
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, rest - part, part);
      current.pop_back();
    }
  };
  if (m > 0) rec(rec, m, m);
  return out;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::fast: return "fast";
    case CountMethod::strata: return "strata";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "fast") return CountMethod::fast;
  if (s == "strata") return CountMethod::strata;
  throw std::invalid_argument("unknown count method '" + s + "'");
}

OperationCounters operation_counters() {
  return {g_brute_divisors.load(), g_fast_evaluations.load()};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::int64_t closed_point_count(int d, std::int64_t q) {
  if (d < 1) throw std::invalid_argument("closed point degree must be >= 1");
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  if (d == 1) return q + 1;
  BigInt sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu != 0) sum += mu * ipow(q, d / e);
  }
  return to_int64(sum / d);
}

// ---------------------------------------------------------------- brute

std::map<Partition, std::int64_t> brute_type_histogram(int m, std::int64_t q,
                                                       std::uint64_t budget) {
  require_prime(q);
  if (m < 1) throw std::invalid_argument("divisor degree must be >= 1");
  BigInt candidates = 0;
  for (int k = 0; k <= m; ++k) candidates += ipow(q, k);
  if (candidates > BigInt(budget)) {
    throw BudgetExceeded("enumerating " + candidates.str() + " divisors exceeds the budget of " +
                         std::to_string(budget));
  }

  const auto p = static_cast<FpPoly::Coeff>(q);
  std::map<Partition, std::int64_t> histogram;
  for (int j = 0; j <= m; ++j) {
    const int k = m - j;  // finite part degree
    std::vector<FpPoly::Coeff> coeffs(k + 1, 0);
    coeffs[k] = 1;
    std::uint64_t local = 0;
    while (true) {
      std::vector<int> parts;
      if (j > 0) parts.push_back(j);
      for (const auto& [degree, mult] : factorization_type(FpPoly(p, coeffs))) {
        for (int i = 0; i < degree; ++i) parts.push_back(mult);
      }
      ++histogram[Partition(std::move(parts))];
      ++local;

      // Odometer over the k lower coefficients.
      int pos = 0;
      while (pos < k && ++coeffs[pos] == p) coeffs[pos++] = 0;
      if (pos == k) break;
    }
    g_brute_divisors += local;
  }
  return histogram;
}

CountRecord count_brute(const Partition& lambda, std::int64_t q, std::uint64_t budget) {
  if (lambda.empty()) throw std::invalid_argument("counting needs a nonempty partition");
  auto histogram = brute_type_histogram(lambda.total(), q, budget);
  auto it = histogram.find(lambda);
  return {lambda, q, it == histogram.end() ? 0 : it->second, CountMethod::brute};
}

// ---------------------------------------------------------------- fast

CountRecord count_fast(const Partition& lambda, std::int64_t q) {
  require_prime(q);
  if (lambda.empty()) throw std::invalid_argument("counting needs a nonempty partition");
  ++g_fast_evaluations;

  // One group per multiplicity value; a group of size a needs closed points
  // whose degrees sum to a.
  std::vector<std::vector<std::map<int, int>>> choices;
  int max_degree = 0;
  for (const auto& [value, a] : lambda.multiplicities()) {
    std::vector<std::map<int, int>> splits;
    std::map<int, int> scratch;
    degree_splits(a, a, scratch, splits);
    choices.push_back(std::move(splits));
    max_degree = std::max(max_degree, a);
  }
  std::vector<BigInt> available(max_degree + 1, 0);
  for (int d = 1; d <= max_degree; ++d) available[d] = closed_point_count(d, q);

  BigInt total = 0;
  std::map<int, int> used;  // degree -> points taken across all groups
  auto rec = [&](auto&& self, std::size_t group, BigInt denom) -> void {
    if (group == choices.size()) {
      BigInt term = 1;
      for (const auto& [d, k] : used) term *= falling(available[d], k);
      total += term / denom;
      return;
    }
    for (const auto& split : choices[group]) {
      BigInt local = denom;
      for (const auto& [d, k] : split) {
        used[d] += k;
        local *= factorial(k);
      }
      self(self, group + 1, local);
      for (const auto& [d, k] : split) {
        if ((used[d] -= k) == 0) used.erase(d);
      }
    }
  };
  rec(rec, 0, BigInt(1));
  return {lambda, q, to_int64(total), CountMethod::fast};
}

// ---------------------------------------------------------------- zeta

ZetaSeries zeta_complement(const RemovedPoints& removed, int order) {
  ZetaSeries z = ZetaSeries::binomial_factor(QPoly(1), 1, -1, order) *
                 ZetaSeries::binomial_factor(QPoly::q(), 1, -1, order);
  for (const auto& [degree, count] : removed) {
    if (degree < 1 || count < 0) throw std::invalid_argument("bad removed-point entry");
    z = z * ZetaSeries::binomial_factor(QPoly(1), degree, count, order);
  }
  return z;
}

QPoly uconf_polynomial(const RemovedPoints& removed, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  ZetaSeries z = zeta_complement(removed, n);
  return (z / z.substitute_power(2))[n];
}

std::int64_t uconf_count(const RemovedPoints& removed, int n, std::int64_t q) {
  require_prime(q);
  return to_int64(uconf_polynomial(removed, n).evaluate_integer(q));
}

QPoly strata_w1n22_polynomial(int n) {
  const QPoly q = QPoly::q();
  const QPoly half = QPoly::monomial(0, Rational(1, 2));
  QPoly split = half * (q * q + q);
  QPoly nonsplit = half * (q * q - q);
  return split * uconf_polynomial({{1, 2}}, n) + nonsplit * uconf_polynomial({{2, 1}}, n);
}

CountRecord count_strata_w1n22(int n, std::int64_t q) {
  require_prime(q);
  return {Partition::w1n22(n), q, to_int64(strata_w1n22_polynomial(n).evaluate_integer(q)),
          CountMethod::strata};
}

// ---------------------------------------------------------------- interpolation

std::vector<std::int64_t> default_interpolation_primes(const Partition& lambda) {
  std::vector<std::int64_t> primes;
  std::int64_t p = 1;
  while (static_cast<int>(primes.size()) < lambda.size() + 1) primes.push_back(p = next_prime(p));
  return primes;
}

QPoly interpolate(const Partition& lambda, const std::vector<std::int64_t>& primes,
                  std::optional<std::int64_t> held_out) {
  if (static_cast<int>(primes.size()) < lambda.size() + 1) {
    throw std::invalid_argument("need at least " + std::to_string(lambda.size() + 1) +
                                " primes to interpolate " + lambda.to_string());
  }
  std::vector<Rational> values;
  for (std::int64_t p : primes) {
    require_prime(p);
    values.emplace_back(count_fast(lambda, p).count);
  }
  QPoly poly = lagrange_interpolate(primes, values);

  if (!poly.is_integral()) {
    throw InterpolationError("non-integral coefficients in " + poly.to_string());
  }
  if (poly.degree() != lambda.size()) {
    throw InterpolationError("degree " + std::to_string(poly.degree()) + " of " +
                             poly.to_string() + " differs from the " +
                             std::to_string(lambda.size()) + " parts of " + lambda.to_string());
  }
  std::int64_t check = held_out.value_or(next_prime(*std::max_element(primes.begin(), primes.end())));
  require_prime(check);
  std::int64_t expected = count_fast(lambda, check).count;
  if (poly.evaluate_integer(check) != expected) {
    throw InterpolationError("held-out prime " + std::to_string(check) + " gives " +
                             poly.evaluate_integer(check).str() + ", counted " +
                             std::to_string(expected));
  }
  return poly;
}

}  // namespace symstrata
