#pragma once

// Truncated power series in t over an exact coefficient ring.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symstrata {

template <class Ring>
class TruncatedSeries {
 public:
  /// Zero series known through t^order.
  explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1, Ring{}) {}

  /// 1 + 0 t + ... through t^order.
  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Ring(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Ring& operator[](int n) const {
    if (n < 0 || n > order()) {
      throw std::out_of_range("coefficient t^" + std::to_string(n) +
                              " is beyond the truncation order " + std::to_string(order()));
    }
    return coeffs_[n];
  }
  Ring& operator[](int n) {
    return const_cast<Ring&>(static_cast<const TruncatedSeries&>(*this)[n]);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      for (int j = 0; i + j <= out.order(); ++j) {
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  /// Multiplicative inverse; the constant term must be exactly 1.
  TruncatedSeries inverse() const {
    if (!(coeffs_[0] == Ring(1))) {
      throw std::domain_error("series inverse needs constant term 1");
    }
    TruncatedSeries out(order());
    out.coeffs_[0] = Ring(1);
    for (int n = 1; n <= order(); ++n) {
      Ring acc{};
      for (int k = 1; k <= n; ++k) acc = acc + coeffs_[k] * out.coeffs_[n - k];
      out.coeffs_[n] = Ring{} - acc;
    }
    return out;
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.inverse();
  }

  /// t -> t^k, keeping the same truncation order.
  TruncatedSeries substitute_power(int k) const {
    if (k < 1) throw std::invalid_argument("substitution power must be positive");
    TruncatedSeries out(order());
    for (int n = 0; n * k <= order(); ++n) out.coeffs_[n * k] = coeffs_[n];
    return out;
  }

  /// (1 - c t^k)^e for integer e; negative e expands the geometric series.
  static TruncatedSeries binomial_factor(const Ring& c, int k, int e, int order) {
    TruncatedSeries base = one(order);
    if (k <= order) base.coeffs_[k] = Ring{} - c;
    if (e == 0) return base.power(0);
    TruncatedSeries unit = e > 0 ? base : base.inverse();
    return unit.power(e > 0 ? e : -e);
  }

  TruncatedSeries power(int e) const {
    TruncatedSeries out = one(order());
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  const std::vector<Ring>& coefficients() const { return coeffs_; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    return order;
  }

  std::vector<Ring> coeffs_;
};

}  // namespace symstrata
