#pragma once

// E-polynomial side: Kapranov zeta functions through the power structure
// (1 - u^p v^q t)^{-a}, configuration-space classes, and stratum classes of
// the line obtained from interpolated point counts.

#include "symstrata/arith.hpp"
#include "symstrata/hodge.hpp"
#include "symstrata/series.hpp"

namespace symstrata {

using EZetaSeries = TruncatedSeries<EPoly>;

/// Coefficient of t^n is the E-polynomial of Sym^n.
EZetaSeries kapranov_zeta(const EPoly& e, int order);

/// E-polynomial of UConf_n: coefficient of t^n in Z(t) / Z(t^2).
EPoly e_uconf(const EPoly& e, int n);

/// Class of w_lambda(P^1): interpolate(lambda) with q -> uv.
EPoly e_wlambda_p1(const Partition& lambda);

/// q -> uv. Coefficients must be integers.
EPoly from_qpoly(const QPoly& poly);

/// uv -> q. Throws std::domain_error on a non-Tate monomial.
QPoly tate_specialize(const EPoly& e);

}  // namespace symstrata
