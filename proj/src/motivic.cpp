#include "symstrata/motivic.hpp"

#include <stdexcept>

namespace symstrata {

EZetaSeries kapranov_zeta(const EPoly& e, int order) {
  EZetaSeries z = EZetaSeries::one(order);
  for (const auto& [mono, a] : e.terms()) {
    if (mono.first < 0 || mono.second < 0) {
      throw std::invalid_argument("kapranov_zeta needs nonnegative exponents");
    }
    if (a > INT32_MAX || a < -INT32_MAX) throw std::overflow_error("coefficient too large");
    z = z * EZetaSeries::binomial_factor(EPoly::monomial(mono.first, mono.second), 1,
                                         -static_cast<int>(a), order);
  }
  return z;
}

EPoly e_uconf(const EPoly& e, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  EZetaSeries z = kapranov_zeta(e, n);
  return (z / z.substitute_power(2))[n];
}

EPoly from_qpoly(const QPoly& poly) {
  EPoly e;
  for (const auto& [k, c] : poly.terms()) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::domain_error("class has non-integral coefficient " + rational_to_string(c));
    }
    e.add_term(k, k, static_cast<std::int64_t>(boost::multiprecision::numerator(c)));
  }
  return e;
}

QPoly tate_specialize(const EPoly& e) {
  QPoly out;
  for (const auto& [mono, c] : e.terms()) {
    if (mono.first != mono.second) {
      throw std::domain_error("non-Tate monomial in " + e.to_string());
    }
    out.add_term(mono.first, c);
  }
  return out;
}

EPoly e_wlambda_p1(const Partition& lambda) {
  EPoly e = from_qpoly(interpolate(lambda, default_interpolation_primes(lambda)));
  if (!e.is_tate()) {
    throw std::logic_error("stratum class " + e.to_string() + " is not Tate");
  }
  return e;
}

}  // namespace symstrata
