#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hforge/group_theory.hpp"
#include "hforge/ncat.hpp"
#include "oracles.hpp"

using namespace hforge;
using namespace hforge::cat;

namespace {

std::vector<std::vector<Id>> z5_table() {
  std::vector<std::vector<Id>> t(5, std::vector<Id>(5));
  for (Id i = 0; i < 5; ++i)
    for (Id j = 0; j < 5; ++j) t[i][j] = (i + j) % 5;
  return t;
}

}  // namespace

TEST_CASE("one-object one-morphism category as n=1 validates") {
  auto a = from_fincategory(monoid_category({{0}}, 0));
  CHECK(validate_ncategory(a).ok());
}

TEST_CASE("nerve-ready poset 0->1 as n=1 validates") {
  auto a = from_fincategory(chain_poset(2));
  CHECK(validate_ncategory(a).ok());
}

TEST_CASE("round trip through NCategory preserves the category") {
  auto c = chain_poset(3);
  auto back = to_fincategory(from_fincategory(c));
  CHECK(back.compose_table == c.compose_table);
  CHECK(back.identity == c.identity);
}

TEST_CASE("commutative monoid 2-category validates") {
  auto a = two_category_from_commutative_monoid(z5_table(), 0);
  CHECK(validate_ncategory(a).ok());
}

TEST_CASE("monoid-with-identity-2-cells validates even when noncommutative") {
  auto s3 = grp::symmetric_group_3();
  std::vector<std::vector<Id>> t(6, std::vector<Id>(6));
  for (Id i = 0; i < 6; ++i)
    for (Id j = 0; j < 6; ++j) t[i][j] = s3.mult[i][j];
  auto a = two_category_from_monoid_identities(t, 0);
  CHECK(validate_ncategory(a).ok());
}

TEST_CASE("corrupting one interchange entry is reported with a witness quadruple") {
  auto a = two_category_from_commutative_monoid(z5_table(), 0);
  // vertical composition 1 *1 1 = 2; corrupt to 3
  a.set_compose(2, 1, 1, 1, 3);
  auto rep = validate_ncategory(a);
  CHECK_FALSE(rep.ok());
  CHECK(rep.cites("interchange"));
  bool witness_quadruple = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "interchange" && v.witness.size() == 4) witness_quadruple = true;
  CHECK(witness_quadruple);
}

TEST_CASE("mutation soundness: single corrupted table entry always rejected") {
  std::mt19937_64 gen(20260810);
  auto base = two_category_from_commutative_monoid(z5_table(), 0);
  REQUIRE(validate_ncategory(base).ok());
  int tried = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = base;
    // choose a table: 0 = comp(2,0), 1 = comp(2,1), 2 = ident[1] (unit cell)
    int which = static_cast<int>(gen() % 3);
    if (which == 2) {
      Id wrong = 1 + static_cast<Id>(gen() % 4);
      if (a.ident[1][0] == wrong) continue;
      a.ident[1][0] = wrong;
    } else {
      int p = which == 0 ? 0 : 1;
      Id x = static_cast<Id>(gen() % 5), y = static_cast<Id>(gen() % 5);
      Id old = a.compose(2, p, x, y);
      Id now = static_cast<Id>(gen() % 5);
      if (now == old) continue;
      a.set_compose(2, p, x, y, now);
    }
    ++tried;
    CHECK_FALSE(validate_ncategory(a).ok());
  }
  CHECK(tried > 100);
}

TEST_CASE("identity and constant n-functors validate") {
  auto a = two_category_from_commutative_monoid(z5_table(), 0);
  CHECK(validate_nfunctor(identity_nfunctor(a), a, a).ok());
  auto pt = two_category_from_commutative_monoid({{0}}, 0);
  CHECK(validate_nfunctor(constant_nfunctor(a, pt), a, pt).ok());
}

TEST_CASE("swapping parallel cells breaks functor commutation") {
  // swapping 1 and 2 in Z4 is not a homomorphism: F(1+1) = 1 but F(1)+F(1) = 0
  std::vector<std::vector<Id>> z4(4, std::vector<Id>(4));
  for (Id i = 0; i < 4; ++i)
    for (Id j = 0; j < 4; ++j) z4[i][j] = (i + j) % 4;
  auto a = from_fincategory(monoid_category(z4, 0, "Z4"));
  auto f = identity_nfunctor(a);
  std::swap(f.map[1][1], f.map[1][2]);
  auto rep = validate_nfunctor(f, a, a);
  CHECK_FALSE(rep.ok());
  CHECK(rep.cites("functor-comp"));
}

TEST_CASE("dimension mismatch is structural") {
  auto a = from_fincategory(chain_poset(2));
  auto b = two_category_from_commutative_monoid(z5_table(), 0);
  NFunctor f;
  f.map = {{0}, {0}};
  CHECK_THROWS_AS(validate_nfunctor(f, a, b), StructuralError);
}
