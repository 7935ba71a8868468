#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hforge/model.hpp"
#include "oracles.hpp"

using namespace hforge;
using namespace hforge::cat;
using namespace hforge::model;

namespace {

ModelStructure chain2_wc_all() {
  // base 0->1 with W = C = all, F = identities
  auto c = chain_poset(2);
  std::vector<Id> all = {0, 1, 2};
  return ModelStructure::from_sets(c, all, {c.identity[0], c.identity[1]}, all);
}

}  // namespace

TEST_CASE("the W=C=all, F=ids structure on 0->1 validates") {
  auto rep = validate_model_structure(chain2_wc_all());
  CHECK(rep.ok());
}

TEST_CASE("W=F=C=all on 0->1 fails lifting with a square witness") {
  auto c = chain_poset(2);
  std::vector<Id> all = {0, 1, 2};
  auto m = ModelStructure::from_sets(c, all, all, all);
  auto rep = validate_model_structure(m);
  CHECK_FALSE(rep.ok());
  CHECK(rep.cites("lifting"));
}

TEST_CASE("missing pullback cited as bicompleteness") {
  auto wedge = poset_category(3, {{0, 2}, {1, 2}}, "wedge");
  std::vector<Id> all;
  for (Id f = 0; f < wedge.num_morphisms(); ++f) all.push_back(f);
  auto m = ModelStructure::from_sets(wedge, all, all, all);
  auto rep = validate_model_structure(m);
  CHECK(rep.cites("bicompleteness"));
}

TEST_CASE("class ids outside the morphism set are structural") {
  auto c = chain_poset(2);
  CHECK_THROWS_AS(ModelStructure::from_sets(c, {99}, {}, {}), StructuralError);
}

TEST_CASE("one-object category has exactly one model structure") {
  auto c = monoid_category({{0}}, 0);
  auto all = enumerate_model_structures(c);
  REQUIRE(all.size() == 1);
  CHECK(all[0].in_w == std::vector<char>{1});
}

namespace {

void check_against_oracle(const FinCategory& c) {
  auto got = enumerate_model_structures(c);
  auto expected = oracles::enumerate_models_oracle(c);
  auto cmp = [](const std::array<std::vector<char>, 3>& a,
                const std::array<std::vector<char>, 3>& b) { return a < b; };
  std::sort(expected.begin(), expected.end(), cmp);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].in_w == expected[i][0]);
    CHECK(got[i].in_f == expected[i][1]);
    CHECK(got[i].in_c == expected[i][2]);
  }
}

}  // namespace

TEST_CASE("0->1 enumeration contains the two expected structures and matches the oracle") {
  auto c = chain_poset(2);
  check_against_oracle(c);
  auto got = enumerate_model_structures(c);
  // (all, ids, all) and (all, all, ids) appear
  std::vector<char> all(c.num_morphisms(), 1);
  std::vector<char> ids(c.num_morphisms(), 0);
  ids[c.identity[0]] = ids[c.identity[1]] = 1;
  bool f_ids = false, c_ids = false;
  for (const auto& m : got) {
    if (m.in_w == all && m.in_f == ids && m.in_c == all) f_ids = true;
    if (m.in_w == all && m.in_f == all && m.in_c == ids) c_ids = true;
  }
  CHECK(f_ids);
  CHECK(c_ids);
}

TEST_CASE("0->1->2 enumeration equals the independent oracle") {
  check_against_oracle(chain_poset(3));
}

TEST_CASE("enumeration bound refusal carries a size estimate") {
  auto c = chain_poset(3);
  CHECK_THROWS_AS(enumerate_model_structures(c, 3), BoundError);
}

TEST_CASE("enumeration is invariant under relabeling") {
  auto c = chain_poset(3);
  auto base = enumerate_model_structures(c);
  std::vector<Id> op = {2, 0, 1};
  std::vector<Id> mp(c.num_morphisms());
  for (Id i = 0; i < c.num_morphisms(); ++i) mp[i] = (i + 2) % c.num_morphisms();
  auto r = relabel(c, op, mp);
  auto relabeled = enumerate_model_structures(r);
  REQUIRE(relabeled.size() == base.size());
  // map each relabeled structure back and compare as sets
  std::set<std::array<std::vector<char>, 3>> expect, got;
  for (const auto& m : base) expect.insert({m.in_w, m.in_f, m.in_c});
  for (const auto& m : relabeled) {
    std::vector<char> w(c.num_morphisms()), f(c.num_morphisms()), cc(c.num_morphisms());
    for (Id i = 0; i < c.num_morphisms(); ++i) {
      w[i] = m.in_w[mp[i]];
      f[i] = m.in_f[mp[i]];
      cc[i] = m.in_c[mp[i]];
    }
    got.insert({w, f, cc});
  }
  CHECK(expect == got);
}

TEST_CASE("cofibrant object replaces by itself with an identity connecting map") {
  auto m = chain2_wc_all();
  auto w = replacement(m, 1, false);
  // F∩W = {id0, id1}, so the factorization of 0 -> 1 must end in id1
  CHECK(w.replacement == 1);
  CHECK(w.connecting == m.base.identity[1]);
  CHECK(is_cofibrant(m, w.replacement));
}

TEST_CASE("fibrant replacement of 0 in the F=ids structure is 1") {
  auto m = chain2_wc_all();
  auto w = replacement(m, 0, true);
  CHECK(w.replacement == 1);
  CHECK(m.c(w.connecting));
  CHECK(m.w(w.connecting));
  CHECK(is_fibrant(m, w.replacement));
}

TEST_CASE("replacement witnesses re-validate against class tables") {
  for (const auto& base : oracles::small_posets()) {
    if (!check_bicompleteness(base).ok()) continue;
    for (const auto& m : enumerate_model_structures(base))
      for (Id x = 0; x < base.num_objects; ++x) {
        auto q = replacement(m, x, false);
        CHECK(m.f_(q.connecting));
        CHECK(m.w(q.connecting));
        CHECK(is_cofibrant(m, q.replacement));
        auto r = replacement(m, x, true);
        CHECK(m.c(r.connecting));
        CHECK(m.w(r.connecting));
        CHECK(is_fibrant(m, r.replacement));
      }
  }
}

TEST_CASE("homotopy is reflexive via the constant cylinder") {
  auto m = chain2_wc_all();
  for (Id f = 0; f < m.base.num_morphisms(); ++f) {
    HomotopyWitness w;
    CHECK(homotopic_witness_exists(m, f, f, &w));
  }
}

TEST_CASE("homotopy relation is symmetric and transitive on enumerated structures") {
  for (const auto& base : oracles::small_posets()) {
    if (!check_bicompleteness(base).ok()) continue;
    for (const auto& m : enumerate_model_structures(base))
      for (Id a = 0; a < base.num_objects; ++a) {
        if (!is_cofibrant(m, a)) continue;
        for (Id x = 0; x < base.num_objects; ++x) {
          if (!is_fibrant(m, x)) continue;
          auto hom = base.hom(a, x);
          for (Id f : hom)
            for (Id g : hom) {
              bool fg = homotopic_witness_exists(m, f, g);
              bool gf = homotopic_witness_exists(m, g, f);
              CHECK(fg == gf);
              if (fg)
                for (Id h : hom)
                  if (homotopic_witness_exists(m, g, h))
                    CHECK(homotopic_witness_exists(m, f, h));
            }
        }
      }
  }
}

TEST_CASE("pi(0,1) on the F=ids structure is a single class") {
  auto m = chain2_wc_all();
  // precondition: 0 cofibrant, 1 fibrant
  auto classes = homotopy_classes(m, 0, 1);
  CHECK(classes.num_classes == 1);
}

TEST_CASE("precondition errors name the failing side") {
  auto m = chain2_wc_all();
  // 0 is not fibrant here (0 -> 1 not in F)
  CHECK_THROWS_AS(homotopy_classes(m, 0, 0), PreconditionError);
}

TEST_CASE("Ho of W=all structure on 0->1 makes the objects isomorphic") {
  auto m = chain2_wc_all();
  auto ho = homotopy_category(m);
  CHECK(validate_category(ho.cat).ok());
  CHECK(ho.cat.hom(0, 1).size() == 1);
  CHECK(ho.cat.hom(1, 0).size() == 1);
  Id f = ho.cat.hom(0, 1)[0], g = ho.cat.hom(1, 0)[0];
  CHECK(ho.cat.compose(g, f) == ho.cat.identity[0]);
  CHECK(ho.cat.compose(f, g) == ho.cat.identity[1]);
}

TEST_CASE("Ho of a one-object category equals the base") {
  auto base = monoid_category({{0}}, 0);
  auto ms = enumerate_model_structures(base);
  auto ho = homotopy_category(ms[0]);
  CHECK(ho.cat.num_objects == 1);
  CHECK(ho.cat.num_morphisms() == 1);
}

TEST_CASE("word oracle with empty W reproduces hom sets") {
  auto c = chain_poset(3);
  auto r = localization_words_oracle(c, {}, 4);
  CHECK(r.stabilized);
  for (Id a = 0; a < 3; ++a)
    for (Id b = 0; b < 3; ++b)
      CHECK(r.hom_classes[a][b] == static_cast<int>(c.hom(a, b).size()));
}

TEST_CASE("word oracle inverts f on 0->1") {
  auto c = chain_poset(2);
  Id f = c.hom(0, 1)[0];
  auto r = localization_words_oracle(c, {f, c.identity[0], c.identity[1]}, 5);
  CHECK(r.stabilized);
  for (Id a = 0; a < 2; ++a)
    for (Id b = 0; b < 2; ++b) CHECK(r.hom_classes[a][b] == 1);
}

TEST_CASE("desk-scale localization agreement on posets up to 3 objects") {
  for (const auto& base : oracles::small_posets()) {
    if (!check_bicompleteness(base).ok()) continue;
    for (const auto& m : enumerate_model_structures(base)) {
      auto ho = homotopy_category(m);
      WordOracleResult oracle;
      int len = 3;
      do {
        oracle = localization_words_oracle(base, m.class_w(), len);
        ++len;
      } while (!oracle.stabilized && len <= 7);
      REQUIRE(oracle.stabilized);
      for (Id a = 0; a < base.num_objects; ++a)
        for (Id b = 0; b < base.num_objects; ++b)
          CHECK(static_cast<int>(ho.cat.hom(a, b).size()) == oracle.hom_classes[a][b]);
    }
  }
}

TEST_CASE("identity adjunction on a valid structure is a Quillen functor") {
  auto m = chain2_wc_all();
  auto rep = validate_quillen_functor(m, m, identity_adjunction(m.base));
  CHECK(rep.ok());
}

TEST_CASE("identity adjunction between the two 0->1 structures fails one direction") {
  auto c = chain_poset(2);
  std::vector<Id> all = {0, 1, 2};
  std::vector<Id> ids = {c.identity[0], c.identity[1]};
  auto m_fids = ModelStructure::from_sets(c, all, ids, all);
  auto m_cids = ModelStructure::from_sets(c, all, all, ids);
  // From (all, ids, all) to (all, all, ids): f is a cofibration whose image
  // is not one, and f is a target fibration whose R-image is not one.
  auto rep = validate_quillen_functor(m_fids, m_cids, identity_adjunction(c));
  CHECK(rep.cites("quillen-left"));
  CHECK(rep.cites("quillen-right"));
  // The other direction satisfies both conditions.
  auto rep2 = validate_quillen_functor(m_cids, m_fids, identity_adjunction(c));
  CHECK(rep2.ok());
}

TEST_CASE("a cofibration landing outside C' is reported naming it") {
  auto m = chain2_wc_all();
  auto c = chain_poset(2);
  std::vector<Id> all = {0, 1, 2};
  std::vector<Id> ids = {c.identity[0], c.identity[1]};
  auto tgt = ModelStructure::from_sets(c, all, all, ids);
  auto rep = validate_quillen_functor(m, tgt, identity_adjunction(c));
  bool named = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "quillen-left" && !v.witness.empty() && v.witness[0] == c.hom(0, 1)[0])
      named = true;
  CHECK(named);
}
