#include "symstrata/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace symstrata {

namespace {

using Coeff = FpPoly::Coeff;

Coeff mulmod(Coeff a, Coeff b, Coeff p) {
  return static_cast<Coeff>(static_cast<unsigned __int128>(a) * b % p);
}

Coeff inverse_mod(Coeff a, Coeff p) {
  // Fermat; p is prime.
  Coeff result = 1;
  Coeff base = a % p;
  Coeff e = p - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("field mismatch");
}

}  // namespace

FpPoly::FpPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  Coeff inv = inverse_mod(lead(), p_);
  FpPoly out(p_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = mulmod(c_[i], inv, p_);
  return out;
}

FpPoly FpPoly::derivative() const {
  FpPoly out(p_);
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = mulmod(c_[i], i % p_, p_);
  out.trim();
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a[i] + b[i]) % a.p_;
  out.trim();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a[i] + a.p_ - b[i]) % a.p_;
  out.trim();
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] = (out.c_[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
  }
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Coeff p = a.p_;
  FpPoly rem = a;
  FpPoly quo(p);
  if (rem.degree() < b.degree()) return {quo, rem};
  quo.c_.assign(rem.degree() - b.degree() + 1, 0);
  Coeff inv = inverse_mod(b.lead(), p);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Coeff factor = mulmod(rem.lead(), inv, p);
    quo.c_[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i) {
      Coeff sub = mulmod(factor, b.c_[i], p);
      rem.c_[shift + i] = (rem.c_[shift + i] + p - sub) % p;
    }
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return FpPoly::divmod(a, b).first; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return FpPoly::divmod(a, b).second; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(m.modulus(), 1) % m;
  FpPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

namespace {

// Over a prime field every coefficient is its own p-th root, so
// f(x) = g(x^p) has p-th root g(x).
FpPoly pth_root(const FpPoly& f) {
  const Coeff p = f.modulus();
  std::vector<Coeff> out;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) out.push_back(f[i]);
  return FpPoly(p, std::move(out));
}

}  // namespace

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> out;
  if (f.degree() <= 0) return out;
  const Coeff p = f.modulus();

  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly factor = w / y;
    if (factor.degree() > 0) out.emplace_back(factor.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, e] : squarefree_decomposition(pth_root(c.monic()))) {
      out.emplace_back(std::move(g), e * static_cast<int>(p));
    }
  }
  return out;
}

std::map<int, int> distinct_degree_counts(const FpPoly& g_in) {
  std::map<int, int> counts;
  FpPoly g = g_in.monic();
  const Coeff p = g.modulus();
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % g;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, p, g);  // h = x^{p^d} mod g
    FpPoly factor = gcd(g, h - x);
    if (factor.degree() > 0) {
      counts[d] += factor.degree() / d;
      g = g / factor;
      h = h % g;
    }
  }
  if (g.degree() > 0) counts[g.degree()] += 1;
  return counts;
}

std::vector<std::pair<int, int>> factorization_type(const FpPoly& f) {
  std::vector<std::pair<int, int>> type;
  for (const auto& [g, e] : squarefree_decomposition(f.monic())) {
    for (const auto& [d, count] : distinct_degree_counts(g)) {
      for (int k = 0; k < count; ++k) type.emplace_back(d, e);
    }
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace symstrata
