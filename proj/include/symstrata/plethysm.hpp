#pragma once

// Symmetric and exterior powers of Hodge tables.
//
// Two conventions coexist and must not be confused:
//  - sym_plain / ext_plain ignore the cohomological parity of the classes.
//    The semi-filtration E1 formula uses plain Sym on the odd part and plain
//    Lambda on the even part.
//  - graded_sym is the Koszul-signed power (Lambda on odd classes, Sym on
//    even ones). This is H_c of a symmetric product.
//
// Negative powers give the zero table, so that summation ranges like
// Sym^{n-2p-1} vanish without special casing.

#include "symstrata/hodge.hpp"

namespace symstrata {

HodgeTable sym_plain(const HodgeTable& v, int k);
HodgeTable ext_plain(const HodgeTable& v, int k);
HodgeTable graded_sym(const HodgeTable& v, int k);

/// Classes of cohomological degree exactly l.
HodgeTable graded_summand(const HodgeTable& v, int l);

HodgeTable odd_part(const HodgeTable& v);
HodgeTable even_part(const HodgeTable& v);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace symstrata
