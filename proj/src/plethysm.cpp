#include "symstrata/plethysm.hpp"

#include <functional>
#include <vector>

namespace symstrata {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

// Builds the degree-k piece of a product of per-class power series. For a
// class of multiplicity m, `count(m, j)` is the dimension of its j-th power
// (C(m+j-1, j) for Sym, C(m, j) for Lambda); all j copies carry j times the
// class's gradings.
HodgeTable power(const HodgeTable& v, int k,
                 const std::function<std::int64_t(std::int64_t, int)>& count) {
  if (k < 0) return HodgeTable(v.flavor());
  std::vector<HodgeTable> by_count(k + 1, HodgeTable(v.flavor()));
  by_count[0] = HodgeTable::unit(v.flavor());

  for (const auto& c : v.classes()) {
    std::vector<HodgeTable> next(k + 1, HodgeTable(v.flavor()));
    for (int used = 0; used <= k; ++used) {
      if (by_count[used].empty()) continue;
      for (int j = 0; used + j <= k; ++j) {
        std::int64_t dim = count(c.mult, j);
        if (dim == 0) {
          if (j > 0) break;
          continue;
        }
        HodgeTable piece(v.flavor());
        piece.add(j * c.degree, {j * c.type.p, j * c.type.q}, dim);
        next[used + j] = direct_sum(next[used + j], tensor(by_count[used], piece));
      }
    }
    by_count = std::move(next);
  }
  return by_count[k];
}

}  // namespace

HodgeTable sym_plain(const HodgeTable& v, int k) {
  return power(v, k, [](std::int64_t m, int j) { return binomial(m + j - 1, j); });
}

HodgeTable ext_plain(const HodgeTable& v, int k) {
  return power(v, k, [](std::int64_t m, int j) { return binomial(m, j); });
}

HodgeTable graded_summand(const HodgeTable& v, int l) {
  HodgeTable out(v.flavor());
  for (const auto& [key, mult] : v) {
    if (key.degree == l) out.add(key.degree, key.type, mult);
  }
  return out;
}

HodgeTable odd_part(const HodgeTable& v) {
  HodgeTable out(v.flavor());
  for (const auto& [key, mult] : v) {
    if (key.degree % 2 != 0) out.add(key.degree, key.type, mult);
  }
  return out;
}

HodgeTable even_part(const HodgeTable& v) {
  HodgeTable out(v.flavor());
  for (const auto& [key, mult] : v) {
    if (key.degree % 2 == 0) out.add(key.degree, key.type, mult);
  }
  return out;
}

HodgeTable graded_sym(const HodgeTable& v, int k) {
  if (v.flavor() != Flavor::compact) {
    throw std::invalid_argument("graded_sym expects compactly supported cohomology");
  }
  HodgeTable out(v.flavor());
  if (k < 0) return out;
  HodgeTable odd = odd_part(v);
  HodgeTable even = even_part(v);
  for (int a = 0; a <= k; ++a) {
    out = direct_sum(out, tensor(ext_plain(odd, a), sym_plain(even, k - a)));
  }
  return out;
}

}  // namespace symstrata
