#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hforge/fincat.hpp"
#include "oracles.hpp"

using namespace hforge;
using namespace hforge::cat;

TEST_CASE("one object one morphism category validates") {
  auto c = monoid_category({{0}}, 0, "triv");
  CHECK(validate_category(c).ok());
}

TEST_CASE("posets validate and have one morphism per related pair") {
  auto c = chain_poset(3);
  CHECK(validate_category(c).ok());
  CHECK(c.num_morphisms() == 6);
  CHECK(c.hom(0, 2).size() == 1);
  CHECK(c.hom(2, 0).empty());
}

TEST_CASE("group monoid categories validate, non-associative tables do not") {
  auto z3 = monoid_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, "Z3");
  CHECK(validate_category(z3).ok());

  auto bad = z3;
  bad.set_compose(1, 1, 1);  // 1*1 = 1 instead of 2
  auto rep = validate_category(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.cites("associativity"));
}

TEST_CASE("corrupting a unit row is caught") {
  auto z2 = monoid_category({{0, 1}, {1, 0}}, 0, "Z2");
  auto bad = z2;
  bad.set_compose(0, 1, 0);
  auto rep = validate_category(bad);
  CHECK(rep.cites("unit-left"));
}

TEST_CASE("dangling ids are structural errors, not axiom violations") {
  auto c = chain_poset(2);
  c.morphisms[2].tgt = 9;
  CHECK_THROWS_AS(validate_category(c), StructuralError);
}

TEST_CASE("opposite is an involution and validates") {
  for (const auto& c : oracles::small_posets()) {
    CHECK(validate_category(opposite(c)).ok());
    auto back = opposite(opposite(c));
    CHECK(back.compose_table == c.compose_table);
    for (Id f = 0; f < c.num_morphisms(); ++f) {
      CHECK(back.src(f) == c.src(f));
      CHECK(back.tgt(f) == c.tgt(f));
    }
  }
}

TEST_CASE("product category validates") {
  auto p = product_category(chain_poset(2), chain_poset(2));
  CHECK(validate_category(p).ok());
  CHECK(p.num_objects == 4);
}

TEST_CASE("relabeling preserves validity") {
  auto c = chain_poset(3);
  std::vector<Id> op = {2, 0, 1};
  std::vector<Id> mp(c.num_morphisms());
  for (Id i = 0; i < c.num_morphisms(); ++i) mp[i] = (i + 2) % c.num_morphisms();
  auto r = relabel(c, op, mp);
  CHECK(validate_category(r).ok());
}

TEST_CASE("identity functor validates; broken functor reported") {
  auto c = chain_poset(3);
  auto f = identity_functor(c);
  CHECK(validate_functor(f, c, c).ok());

  // send the 0->2 morphism somewhere wrong
  auto g = f;
  Id f02 = c.hom(0, 2)[0];
  g.mor[f02] = c.hom(0, 1)[0];
  auto rep = validate_functor(g, c, c);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("isos detected in group categories only") {
  auto z2 = monoid_category({{0, 1}, {1, 0}}, 0, "Z2");
  CHECK(z2.is_iso(1));
  auto c = chain_poset(2);
  CHECK_FALSE(c.is_iso(c.hom(0, 1)[0]));
}
