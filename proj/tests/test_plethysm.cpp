#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "symstrata/catalog.hpp"
#include "symstrata/plethysm.hpp"

using namespace symstrata;

namespace {

// Sym^k or Lambda^k of a table by listing multisets (or subsets) of basis
// vectors directly.
HodgeTable enumerate_power(const HodgeTable& v, int k, bool exterior) {
  std::vector<HodgeClass> basis;
  for (const auto& c : v.classes()) {
    for (std::int64_t i = 0; i < c.mult; ++i) basis.push_back({c.degree, c.type, 1});
  }
  HodgeTable out(v.flavor());
  std::function<void(std::size_t, int, int, int, int)> rec = [&](std::size_t start, int left,
                                                                 int deg, int p, int q) {
    if (left == 0) {
      out.add(deg, {p, q});
      return;
    }
    for (std::size_t i = start; i < basis.size(); ++i) {
      const auto& b = basis[i];
      rec(exterior ? i + 1 : i, left - 1, deg + b.degree, p + b.type.p, q + b.type.q);
    }
  };
  rec(0, k, 0, 0, 0);
  return out;
}

// Koszul-signed symmetric power: exterior on odd degrees, symmetric on even.
HodgeTable enumerate_graded(const HodgeTable& v, int k) {
  HodgeTable odd(v.flavor()), even(v.flavor());
  for (const auto& c : v.classes()) (c.degree % 2 ? odd : even).add(c);
  HodgeTable out(v.flavor());
  for (int i = 0; i <= k; ++i) {
    HodgeTable a = enumerate_power(odd, i, true);
    HodgeTable b = enumerate_power(even, k - i, false);
    for (const auto& ca : a.classes()) {
      for (const auto& cb : b.classes()) {
        out.add(ca.degree + cb.degree, {ca.type.p + cb.type.p, ca.type.q + cb.type.q},
                ca.mult * cb.mult);
      }
    }
  }
  return out;
}

HodgeTable spread_table(int dim) {
  // dim classes in degree 0 with pairwise distinct types.
  HodgeTable t(Flavor::compact);
  for (int i = 0; i < dim; ++i) t.add(0, {i, i});
  return t;
}

}  // namespace

TEST_SUITE("plethysm") {
  TEST_CASE("dimension counts for D, k <= 6") {
    for (int D = 0; D <= 6; ++D) {
      for (int k = 0; k <= 6; ++k) {
        CAPTURE(D);
        CAPTURE(k);
        HodgeTable v = spread_table(D);
        HodgeTable w(Flavor::compact);
        if (D > 0) w.add(0, {0, 0}, D);
        CHECK(sym_plain(v, k).dimension() == oracle::choose(D + k - 1, k) + (D == 0 && k == 0));
        CHECK(ext_plain(v, k).dimension() == oracle::choose(D, k));
        CHECK(sym_plain(w, k).dimension() == sym_plain(v, k).dimension());
        CHECK(ext_plain(w, k).dimension() == ext_plain(v, k).dimension());
      }
    }
  }

  TEST_CASE("types agree with explicit enumeration") {
    HodgeTable v(Flavor::compact, {{0, {0, 0}, 2}, {1, {1, 0}, 1}, {2, {1, 1}, 2}});
    for (int k = 0; k <= 5; ++k) {
      CAPTURE(k);
      CHECK(sym_plain(v, k) == enumerate_power(v, k, false));
      CHECK(ext_plain(v, k) == enumerate_power(v, k, true));
      CHECK(graded_sym(v, k) == enumerate_graded(v, k));
    }
    HodgeTable p2 = hc_table(SpaceId::parse("p2"));
    HodgeTable gm = hc_table(SpaceId::parse("gm"));
    for (int k = 0; k <= 6; ++k) {
      CHECK(graded_sym(p2, k) == enumerate_graded(p2, k));
      CHECK(graded_sym(gm, k) == enumerate_graded(gm, k));
    }
  }

  TEST_CASE("edge indices") {
    HodgeTable v = hc_table(SpaceId::parse("p1"));
    CHECK(sym_plain(v, 0) == HodgeTable::unit(Flavor::compact));
    CHECK(ext_plain(v, 0) == HodgeTable::unit(Flavor::compact));
    CHECK(sym_plain(v, -1).empty());
    CHECK(ext_plain(v, -2).empty());
    CHECK(graded_sym(v, -1).empty());
    CHECK(ext_plain(v, 3).empty());
  }

  TEST_CASE("graded symmetric powers of P^1 are the points of P^k") {
    HodgeTable p1 = hc_table(SpaceId::parse("p1"));
    for (int k = 0; k <= 6; ++k) {
      HodgeTable expected(Flavor::compact);
      for (int i = 0; i <= k; ++i) expected.add(2 * i, {i, i});
      CHECK(graded_sym(p1, k) == expected);
      CHECK(graded_sym(p1, k) == hc_table(SpaceId::parse("sym:p1:" + std::to_string(k))));
    }
  }

  TEST_CASE("graded symmetric powers need compact tables") {
    CHECK_THROWS(graded_sym(ordinary_table(SpaceId::parse("p1")), 2));
  }

  TEST_CASE("odd and even parts split a table") {
    HodgeTable v(Flavor::compact, {{1, {0, 0}, 1}, {2, {1, 1}, 3}, {3, {1, 2}, 1}});
    CHECK(direct_sum(odd_part(v), even_part(v)) == v);
    for (const auto& c : odd_part(v).classes()) CHECK(c.degree % 2 == 1);
    for (const auto& c : even_part(v).classes()) CHECK(c.degree % 2 == 0);
  }

  TEST_CASE("graded summands add up to the graded symmetric power") {
    HodgeTable v = hc_table(SpaceId::parse("gm"));
    for (int k = 0; k <= 5; ++k) {
      HodgeTable total(Flavor::compact);
      for (int l = 0; l <= 2 * k; ++l) {
        HodgeTable part = graded_summand(graded_sym(v, k), l);
        for (const auto& c : part.classes()) CHECK(c.degree == l);
        total = direct_sum(total, part);
      }
      CHECK(total == graded_sym(v, k));
    }
  }

  TEST_CASE("binomial") {
    for (int n = 0; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
    }
  }
}
