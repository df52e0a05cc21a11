#include "symstrata/qpoly.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace symstrata {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << "/" << boost::multiprecision::denominator(r);
  }
  return os.str();
}

QPoly::QPoly(std::int64_t constant) {
  if (constant != 0) terms_[0] = constant;
}

QPoly QPoly::monomial(int k, const Rational& c) {
  QPoly p;
  p.add_term(k, c);
  return p;
}

Rational QPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPoly::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

bool QPoly::is_integral() const {
  for (const auto& [k, c] : terms_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int QPoly::low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

Rational QPoly::evaluate(const Rational& x) const {
  Rational total = 0;
  for (const auto& [k, c] : terms_) {
    Rational power = 1;
    if (k >= 0) {
      for (int i = 0; i < k; ++i) power *= x;
    } else {
      if (x == 0) throw std::domain_error("negative power evaluated at zero");
      for (int i = 0; i < -k; ++i) power /= x;
    }
    total += c * power;
  }
  return total;
}

BigInt QPoly::evaluate_integer(std::int64_t x) const {
  Rational v = evaluate(Rational(x));
  if (boost::multiprecision::denominator(v) != 1) {
    throw std::domain_error("polynomial value is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int k = it->first;
    Rational c = it->second;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    Rational mag = negative ? Rational(-c) : c;
    if (mag != 1 || k == 0) os << rational_to_string(mag);
    if (k != 0) {
      os << "q";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

QPoly lagrange_interpolate(const std::vector<std::int64_t>& xs,
                           const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("interpolation needs matching, nonempty samples");
  }
  if (std::set<std::int64_t>(xs.begin(), xs.end()).size() != xs.size()) {
    throw std::invalid_argument("interpolation abscissae must be distinct");
  }
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis = 1;
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * (QPoly::q() - QPoly(xs[j]));
      denom *= Rational(xs[i] - xs[j]);
    }
    out += basis * QPoly::monomial(0, ys[i] / denom);
  }
  return out;
}

}  // namespace symstrata
