#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hforge/group_theory.hpp"

using namespace hforge;
using namespace hforge::grp;

namespace {

IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = m.rows ? static_cast<int>(rows[0].size()) : 0;
  for (const auto& r : rows)
    for (Int v : r) m.a.push_back(v);
  return m;
}

}  // namespace

TEST_CASE("smith normal form satisfies u*m*v = d on random matrices") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    int r = 1 + static_cast<int>(gen() % 5);
    int c = 1 + static_cast<int>(gen() % 5);
    IntMatrix m = IntMatrix::zero(r, c);
    for (auto& v : m.a) v = static_cast<Int>(gen() % 11) - 5;
    auto snf = smith_normal_form(m);
    auto umv = matmul(matmul(snf.u, m), snf.v);
    CHECK(umv.a == snf.d.a);
    // diagonal, nonnegative, divisibility
    for (int i = 0; i < snf.d.rows; ++i)
      for (int j = 0; j < snf.d.cols; ++j)
        if (i != j) CHECK(snf.d.at(i, j) == 0);
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
  }
}

TEST_CASE("classic invariant factor computations") {
  // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
  auto m = from_rows({{2, 0}, {0, 3}});
  CHECK(abelian_invariants(m, 2) == std::vector<Int>{6});
  // Z^2 / <(2,4)> has invariants [2, 0]
  auto m2 = from_rows({{2}, {4}});
  CHECK(abelian_invariants(m2, 2) == std::vector<Int>{2, 0});
  // trivial group
  auto m3 = from_rows({{1, 0}, {0, 1}});
  CHECK(abelian_invariants(m3, 2).empty());
  // free of rank 2
  CHECK(abelian_invariants(IntMatrix::zero(2, 0), 2) == std::vector<Int>{0, 0});
}

TEST_CASE("column lattice membership") {
  auto m = from_rows({{2, 0}, {0, 3}});
  CHECK(in_column_lattice(m, {4, 3}));
  CHECK_FALSE(in_column_lattice(m, {1, 0}));
  CHECK(in_column_lattice(m, {0, 0}));
}

TEST_CASE("abelian map predicates") {
  // source Z (free), target Z/2: reduction map is well defined and surjective
  FpAbelianGroup zsrc{1, IntMatrix::zero(1, 0)};
  FpAbelianGroup z2{1, from_rows({{2}})};
  AbelianMap red{from_rows({{1}})};
  CHECK(abelian_map_well_defined(zsrc, z2, red));
  CHECK(abelian_map_surjective(z2, red));
  CHECK_FALSE(abelian_map_injective(zsrc, z2, red));
  AbelianMap dbl{from_rows({{2}})};
  CHECK(abelian_map_is_zero(z2, dbl));
  // x2 : Z -> Z is injective, not surjective
  CHECK(abelian_map_injective(zsrc, zsrc, dbl));
  CHECK_FALSE(abelian_map_surjective(zsrc, dbl));
  CHECK(abelian_maps_equal(z2, red, AbelianMap{from_rows({{3}})}));
}

TEST_CASE("word utilities") {
  Word w = {0, 1, -2 - 1};
  auto wi = word_inverse(w);
  CHECK(word_free_reduce({0, 1, -1 - 1, -0 - 1}).empty());
  Word cat;
  cat.insert(cat.end(), w.begin(), w.end());
  cat.insert(cat.end(), wi.begin(), wi.end());
  CHECK(word_free_reduce(cat).empty());
}

TEST_CASE("presentation abelianization") {
  // <x | x^2> has invariants [2]
  GroupPresentation p;
  p.generators = 1;
  p.relators = {{0, 0}};
  CHECK(p.abelian_invariant_factors() == std::vector<Int>{2});
  // free of rank 1
  GroupPresentation f;
  f.generators = 1;
  CHECK(f.abelian_invariant_factors() == std::vector<Int>{0});
}

TEST_CASE("tietze simplification eliminates tree generators") {
  // <a, b | a, a b a^{-1}> should reduce toward <b | b>-free form
  GroupPresentation p;
  p.generators = 2;
  p.relators = {{0}, {0, 1, -1}};
  auto s = tietze_simplify(p);
  CHECK(s.generators <= 1);
  CHECK(s.abelian_invariant_factors() == p.abelian_invariant_factors());
}

TEST_CASE("tietze preserves abelianization on random presentations") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    GroupPresentation p;
    p.generators = 2 + static_cast<int>(gen() % 3);
    int nrel = static_cast<int>(gen() % 4);
    for (int r = 0; r < nrel; ++r) {
      Word w;
      int len = 1 + static_cast<int>(gen() % 5);
      for (int i = 0; i < len; ++i) {
        int g = static_cast<int>(gen() % p.generators);
        w.push_back(gen() % 2 ? g : -g - 1);
      }
      p.relators.push_back(w);
    }
    auto s = tietze_simplify(p);
    CHECK(s.abelian_invariant_factors() == p.abelian_invariant_factors());
  }
}

TEST_CASE("group tables validate and isomorphism search distinguishes") {
  for (const auto& g : groups_up_to_order_6()) CHECK(is_group_table(g));
  CHECK(groups_isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(groups_isomorphic(cyclic_group(4), klein_four_group()));
  CHECK_FALSE(groups_isomorphic(cyclic_group(6), symmetric_group_3()));
  // C6 = C2 x C3 in a relabeled table
  FiniteGroupTable c23;
  c23.name = "C2xC3";
  c23.order = 6;
  c23.unit = 0;
  c23.mult.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int a2 = a % 2, a3 = a / 2, b2 = b % 2, b3 = b / 2;
      c23.mult[a][b] = (a2 + b2) % 2 + 2 * ((a3 + b3) % 3);
    }
  CHECK(is_group_table(c23));
  CHECK(groups_isomorphic(c23, cyclic_group(6)));
}

TEST_CASE("abelianization of tables") {
  CHECK(abelianization_of_table(cyclic_group(6)) == std::vector<Int>{6});
  CHECK(abelianization_of_table(klein_four_group()) == std::vector<Int>{2, 2});
  CHECK(abelianization_of_table(symmetric_group_3()) == std::vector<Int>{2});
  CHECK(abelianization_of_table(cyclic_group(1)).empty());
}
