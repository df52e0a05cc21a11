#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "symstrata/catalog.hpp"
#include "symstrata/hodge.hpp"

using namespace symstrata;

namespace {

const std::vector<std::string> kCatalogIds = {
    "p1",        "p2",        "a1",        "gm",         "p1-minus-deg2", "sym:p1:0",
    "sym:p1:3",  "uconf:p1:2", "pconf:p1:2", "uconf:gm:1", "uconf:gm:4",   "uconf:gm:7",
    "w:1,1,2,2", "w:1,1,1,2,2"};

}  // namespace

TEST_SUITE("hodge") {
  TEST_CASE("tables keep one entry per degree and type") {
    HodgeTable t(Flavor::compact);
    t.add(2, {1, 1});
    t.add(2, {1, 1}, 2);
    t.add(1, {0, 0}, 0);
    CHECK(t.multiplicity(2, {1, 1}) == 3);
    CHECK(t.multiplicity(1, {0, 0}) == 0);
    CHECK(t.classes().size() == 1);
    CHECK(t.dimension() == 3);
    CHECK_THROWS_AS(t.add(0, {0, 0}, -1), std::invalid_argument);
  }

  TEST_CASE("direct sum and tensor obey the semiring laws") {
    std::mt19937 rng(20261018);
    HodgeTable one = HodgeTable::unit(Flavor::compact);
    for (int trial = 0; trial < 200; ++trial) {
      HodgeTable a = gen::random_table(rng, Flavor::compact);
      HodgeTable b = gen::random_table(rng, Flavor::compact);
      HodgeTable c = gen::random_table(rng, Flavor::compact);
      CHECK(direct_sum(a, b) == direct_sum(b, a));
      CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
      CHECK(tensor(a, b) == tensor(b, a));
      CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
      CHECK(tensor(a, one) == a);
      CHECK(direct_sum(a, HodgeTable(Flavor::compact)) == a);
      CHECK(subtract(direct_sum(a, b), b) == a);
      CHECK(tensor(a, b).dimension() == a.dimension() * b.dimension());
      CHECK(euler_characteristic(tensor(a, b)) ==
            euler_characteristic(a) * euler_characteristic(b));
      CHECK(epoly(tensor(a, b)) == epoly(a) * epoly(b));
      CHECK(epoly(direct_sum(a, b)) == epoly(a) + epoly(b));
      CHECK(tate_twist(tate_twist(a, 2), -2) == a);
      CHECK(tate_twist(tensor(a, b), 1) == tensor(tate_twist(a, 1), b));
    }
  }

  TEST_CASE("flavors never mix") {
    HodgeTable a(Flavor::compact, {{0, {0, 0}, 1}});
    HodgeTable b(Flavor::ordinary, {{0, {0, 0}, 1}});
    CHECK_THROWS_AS(direct_sum(a, b), FlavorMismatch);
    CHECK_THROWS_AS(tensor(a, b), FlavorMismatch);
    CHECK_THROWS_AS(subtract(a, b), FlavorMismatch);
    CHECK_THROWS(epoly(b));
  }

  TEST_CASE("subtract refuses what is not there") {
    HodgeTable a(Flavor::compact, {{2, {1, 1}, 1}});
    HodgeTable b(Flavor::compact, {{2, {1, 1}, 2}});
    CHECK_THROWS(subtract(a, b));
    CHECK(subtract(b, a) == a);
  }

  TEST_CASE("Poincare duality") {
    HodgeTable gm = hc_table(SpaceId::parse("gm"));
    HodgeTable dual = poincare_dual(gm, 1);
    CHECK(dual.flavor() == Flavor::ordinary);
    CHECK(dual == HodgeTable(Flavor::ordinary, {{0, {0, 0}, 1}, {1, {1, 1}, 1}}));
    CHECK(poincare_dual(dual, 1) == gm);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      HodgeTable a = gen::random_table(rng, Flavor::compact);
      CHECK(poincare_dual(poincare_dual(a, 4), 4) == a);
      CHECK(a.dimension() == poincare_dual(a, 4).dimension());
    }
    HodgeTable high(Flavor::compact, {{5, {0, 0}, 1}});
    CHECK_THROWS_AS(poincare_dual(high, 2), std::out_of_range);
  }

  TEST_CASE("E-polynomials of small spaces") {
    CHECK(epoly(hc_table(SpaceId::parse("p1"))) == EPoly(1) + EPoly::monomial(1, 1));
    CHECK(epoly(hc_table(SpaceId::parse("gm"))) == EPoly::monomial(1, 1) - EPoly(1));
    CHECK(epoly(hc_table(SpaceId::parse("uconf:p1:2"))) == EPoly::monomial(2, 2));
    CHECK(euler_characteristic(hc_table(SpaceId::parse("gm"))) == 0);
    CHECK(euler_characteristic(hc_table(SpaceId::parse("p2"))) == 3);
    CHECK((EPoly::monomial(1, 1) - EPoly(1)).to_string() == "uv - 1");
  }

  TEST_CASE("weight windows hold on every catalog table") {
    for (const auto& id : kCatalogIds) {
      SpaceId s = SpaceId::parse(id);
      CAPTURE(id);
      CHECK(weight_window_check(hc_table(s), dimension(s)).pass);
      CHECK(weight_window_check(ordinary_table(s), dimension(s)).pass);
    }
  }

  TEST_CASE("weight windows flag impossible classes") {
    HodgeTable bad(Flavor::compact, {{0, {1, 1}, 1}});
    WeightReport r = weight_window_check(bad, 1);
    CHECK_FALSE(r.pass);
    REQUIRE(r.offending.size() == 1);
    CHECK(r.offending[0].degree == 0);

    HodgeTable low(Flavor::ordinary, {{2, {0, 0}, 1}});
    CHECK_FALSE(weight_window_check(low, 2).pass);
  }

  TEST_CASE("betti numbers and Euler characteristic by type") {
    HodgeTable t = hc_table(SpaceId::parse("uconf:gm:4"));
    auto by_type = euler_by_type(t);
    std::int64_t total = 0;
    for (const auto& [type, v] : by_type) total += v;
    CHECK(total == euler_characteristic(t));
    CHECK(euler_characteristic(t) == 0);
  }
}
