#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symstrata {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with exact rational coefficients. Negative powers are
/// allowed so that Tate twists act by multiplication by q^{-k}.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t constant);  // NOLINT: implicit for ring literals
  static QPoly monomial(int k, const Rational& c = 1);
  /// q, i.e. the indeterminate itself.
  static QPoly q() { return monomial(1); }

  Rational coeff(int k) const;
  void add_term(int k, const Rational& c);
  const std::map<int, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  /// Highest power with a nonzero coefficient; -1 for the zero polynomial
  /// when no negative powers are present.
  int degree() const;
  int low_degree() const;

  Rational evaluate(const Rational& x) const;
  /// Integer value at an integer point; throws if the value is not integral.
  BigInt evaluate_integer(std::int64_t x) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly{} - a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly&) const = default;

  /// e.g. "q^4 - q^3 - q^2 + q".
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

/// Exact Lagrange interpolation through distinct abscissae.
QPoly lagrange_interpolate(const std::vector<std::int64_t>& xs,
                           const std::vector<Rational>& ys);

std::string rational_to_string(const Rational& r);

}  // namespace symstrata
