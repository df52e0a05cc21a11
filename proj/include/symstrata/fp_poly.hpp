#pragma once

// Dense univariate polynomials over a prime field, just enough to read off
// the factorization type (degrees and multiplicities of irreducible factors)
// without ever computing the factors themselves.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace symstrata {

class FpPoly {
 public:
  using Coeff = std::uint64_t;

  explicit FpPoly(Coeff p) : p_(p) {}
  /// Coefficients low to high, reduced mod p.
  FpPoly(Coeff p, std::vector<Coeff> coeffs);
  static FpPoly x(Coeff p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(Coeff p, Coeff c) { return FpPoly(p, {c}); }

  Coeff modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Coeff lead() const { return c_.empty() ? 0 : c_.back(); }
  Coeff operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<Coeff>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  bool operator==(const FpPoly&) const = default;

  /// Quotient and remainder; b must be nonzero.
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

 private:
  void trim();

  Coeff p_;
  std::vector<Coeff> c_;
};

FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(FpPoly a, FpPoly b);

/// base^e mod m by square-and-multiply.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Squarefree decomposition of a monic polynomial: pairs (g, e) with the g
/// squarefree, pairwise coprime and f = prod g^e. Handles p-th powers.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f);

/// For a monic squarefree polynomial, degree -> number of irreducible
/// factors of that degree (distinct-degree splitting).
std::map<int, int> distinct_degree_counts(const FpPoly& g);

/// Multiset of (degree, multiplicity) over the irreducible factors of a
/// monic polynomial, sorted.
std::vector<std::pair<int, int>> factorization_type(const FpPoly& f);

}  // namespace symstrata
