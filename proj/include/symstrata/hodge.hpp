#pragma once

// Graded vector spaces whose graded pieces are pure Hodge structures.
//
// Only associated-graded data is tracked: a class is a cohomological degree,
// a Hodge bidegree (p, q) and a multiplicity. Weights are always p + q in the
// standard Deligne normalization, so H_c of the punctured line reads
// {(1,(0,0)), (2,(1,1))}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symstrata {

enum class Flavor { ordinary, compact };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

struct HodgeType {
  int p = 0;
  int q = 0;

  int weight() const { return p + q; }
  bool is_tate() const { return p == q; }
  auto operator<=>(const HodgeType&) const = default;
};

struct HodgeClass {
  int degree = 0;
  HodgeType type;
  std::int64_t mult = 1;

  int weight() const { return type.weight(); }
  bool operator==(const HodgeClass&) const = default;
};

class FlavorMismatch : public std::invalid_argument {
 public:
  FlavorMismatch(Flavor a, Flavor b);
};

/// Canonical multiset of Hodge classes. At most one entry per
/// (degree, type); zero multiplicities are never stored.
class HodgeTable {
 public:
  struct Key {
    int degree = 0;
    HodgeType type;
    auto operator<=>(const Key&) const = default;
  };
  using Storage = std::map<Key, std::int64_t>;

  explicit HodgeTable(Flavor flavor = Flavor::compact) : flavor_(flavor) {}
  HodgeTable(Flavor flavor, std::initializer_list<HodgeClass> classes);

  /// The one-dimensional table {(0,(0,0))x1}.
  static HodgeTable unit(Flavor flavor);

  Flavor flavor() const { return flavor_; }
  bool empty() const { return entries_.empty(); }

  /// Adds `mult` copies of the class; mult must be positive.
  void add(int degree, HodgeType type, std::int64_t mult = 1);
  void add(const HodgeClass& c) { add(c.degree, c.type, c.mult); }

  std::int64_t multiplicity(int degree, HodgeType type) const;
  std::int64_t dimension() const;
  std::vector<HodgeClass> classes() const;

  Storage::const_iterator begin() const { return entries_.begin(); }
  Storage::const_iterator end() const { return entries_.end(); }

  bool operator==(const HodgeTable&) const = default;

 private:
  Flavor flavor_;
  Storage entries_;
};

/// Integer polynomial in u, v. Exponents may be negative only transiently
/// (e.g. after a Tate twist); everything the engine emits is normalized.
class EPoly {
 public:
  using Monomial = std::pair<int, int>;

  EPoly() = default;
  EPoly(std::int64_t constant);  // NOLINT: implicit for ring literals
  static EPoly monomial(int p, int q, std::int64_t coeff = 1);

  std::int64_t coeff(int p, int q) const;
  void add_term(int p, int q, std::int64_t c);
  bool is_zero() const { return terms_.empty(); }
  bool is_tate() const;
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator-(const EPoly& a) { return EPoly{} - a; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  bool operator==(const EPoly&) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

HodgeTable direct_sum(const HodgeTable& a, const HodgeTable& b);
HodgeTable tensor(const HodgeTable& a, const HodgeTable& b);

/// Removes b from a. Throws std::invalid_argument if b is not contained in a.
HodgeTable subtract(const HodgeTable& a, const HodgeTable& b);

/// Twist by Q(k): (i, p, q) -> (i, p - k, q - k).
HodgeTable tate_twist(const HodgeTable& v, int k);

/// (i, p, q) -> (2d - i, d - p, d - q), flipping the flavor. Throws
/// std::out_of_range if a degree leaves [0, 2d].
HodgeTable poincare_dual(const HodgeTable& v, int d);

/// Sum of (-1)^degree * mult * u^p v^q. Requires compact flavor.
EPoly epoly(const HodgeTable& v);

/// Dimension per degree, trailing zeros trimmed.
std::vector<std::int64_t> betti(const HodgeTable& v);

/// Per-type alternating sum: type -> sum of (-1)^degree * mult.
std::map<HodgeType, std::int64_t> euler_by_type(const HodgeTable& v);

std::int64_t euler_characteristic(const HodgeTable& v);

struct WeightReport {
  bool pass = true;
  std::vector<HodgeClass> offending;
};

/// Weight bounds for a smooth variety of dimension d:
///   ordinary: degree <= weight <= 2 degree
///   compact:  2 degree - 2d <= weight <= degree
WeightReport weight_window_check(const HodgeTable& v, int d);

std::string to_string(const HodgeTable& v);

}  // namespace symstrata
