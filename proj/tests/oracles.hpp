#pragma once

// Test-side oracles: small, direct transcriptions of the checked conditions,
// kept independent of the library implementations they cross-check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "hforge/fincat.hpp"
#include "hforge/model.hpp"
#include "hforge/ncat.hpp"

namespace oracles {

using hforge::cat::FinCategory;
using hforge::cat::Id;
using hforge::cat::kNone;

// Direct quantifier transcription of the model structure predicate over a
// base already known to be bicomplete. No sharing with the library's
// validator beyond the FinCategory accessors.
inline bool model_predicate(const FinCategory& c, const std::vector<char>& w,
                            const std::vector<char>& f, const std::vector<char>& cc) {
  const Id m = c.num_morphisms();
  for (Id x = 0; x < c.num_objects; ++x) {
    Id e = c.identity[x];
    if (!w[e] || !f[e] || !cc[e]) return false;
  }
  const std::vector<const std::vector<char>*> classes = {&w, &f, &cc};
  for (const auto* cls : classes)
    for (Id a = 0; a < m; ++a)
      for (Id b = 0; b < m; ++b) {
        if (!(*cls)[a] || !(*cls)[b] || !c.composable(a, b)) continue;
        if (!(*cls)[c.compose(a, b)]) return false;
      }
  for (Id a = 0; a < m; ++a)
    for (Id b = 0; b < m; ++b) {
      if (!c.composable(a, b)) continue;
      Id ab = c.compose(a, b);
      if (w[ab] && (w[a] || w[b]) && !(w[a] && w[b])) return false;
    }
  // retract, raw quantifier form
  for (const auto* cls : classes)
    for (Id i = 0; i < m; ++i)
      for (Id r = 0; r < m; ++r) {
        if (!c.composable(r, i) || c.compose(r, i) != c.identity[c.src(i)]) continue;
        if (c.tgt(r) != c.src(i)) continue;
        for (Id i2 = 0; i2 < m; ++i2)
          for (Id r2 = 0; r2 < m; ++r2) {
            if (!c.composable(r2, i2) || c.compose(r2, i2) != c.identity[c.src(i2)]) continue;
            if (c.tgt(r2) != c.src(i2)) continue;
            for (Id g = 0; g < m; ++g) {
              if (!(*cls)[g] || c.src(g) != c.tgt(i) || c.tgt(g) != c.tgt(i2)) continue;
              for (Id ff = 0; ff < m; ++ff)
                if (c.src(ff) == c.src(i) && c.tgt(ff) == c.src(i2) && !(*cls)[ff])
                  return false;
            }
          }
      }
  // lifting on commuting squares
  for (Id i = 0; i < m; ++i) {
    if (!cc[i]) continue;
    for (Id p = 0; p < m; ++p) {
      if (!f[p] || (!w[i] && !w[p])) continue;
      for (Id top = 0; top < m; ++top) {
        if (c.src(top) != c.src(i) || c.tgt(top) != c.src(p)) continue;
        for (Id bot = 0; bot < m; ++bot) {
          if (c.src(bot) != c.tgt(i) || c.tgt(bot) != c.tgt(p)) continue;
          if (c.compose(p, top) != c.compose(bot, i)) continue;
          bool ok = false;
          for (Id h = 0; h < m; ++h)
            if (c.src(h) == c.tgt(i) && c.tgt(h) == c.src(p) && c.compose(h, i) == top &&
                c.compose(p, h) == bot)
              ok = true;
          if (!ok) return false;
        }
      }
    }
  }
  // factorizations
  for (Id ff = 0; ff < m; ++ff) {
    bool a = false, b = false;
    for (Id p = 0; p < m; ++p)
      for (Id i = 0; i < m; ++i) {
        if (!c.composable(p, i) || c.compose(p, i) != ff) continue;
        if (f[p] && w[p] && cc[i]) a = true;
        if (f[p] && cc[i] && w[i]) b = true;
      }
    if (!a || !b) return false;
  }
  return true;
}

// Brute force enumeration using the oracle predicate.
inline std::vector<std::array<std::vector<char>, 3>> enumerate_models_oracle(
    const FinCategory& c) {
  std::vector<Id> free;
  for (Id m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) free.push_back(m);
  const int k = static_cast<int>(free.size());
  std::vector<std::array<std::vector<char>, 3>> out;
  for (std::uint64_t wm = 0; wm < (1ull << k); ++wm)
    for (std::uint64_t fm = 0; fm < (1ull << k); ++fm)
      for (std::uint64_t cm = 0; cm < (1ull << k); ++cm) {
        std::vector<char> w(c.num_morphisms(), 0), f(c.num_morphisms(), 0),
            cc(c.num_morphisms(), 0);
        for (Id x = 0; x < c.num_objects; ++x)
          w[c.identity[x]] = f[c.identity[x]] = cc[c.identity[x]] = 1;
        for (int b = 0; b < k; ++b) {
          if (wm >> b & 1) w[free[b]] = 1;
          if (fm >> b & 1) f[free[b]] = 1;
          if (cm >> b & 1) cc[free[b]] = 1;
        }
        if (model_predicate(c, w, f, cc)) out.push_back({w, f, cc});
      }
  return out;
}

// Independent cone check for the limits tests.
inline bool cone_commutes_oracle(const FinCategory& c, const hforge::cat::Diagram& d,
                                 const hforge::cat::Cone& cone) {
  for (Id x = 0; x < d.shape.num_objects; ++x)
    if (c.src(cone.legs[x]) != cone.apex || c.tgt(cone.legs[x]) != d.object_label[x])
      return false;
  for (Id u = 0; u < d.shape.num_morphisms(); ++u)
    if (c.compose(d.morphism_label[u], cone.legs[d.shape.src(u)]) !=
        cone.legs[d.shape.tgt(u)])
      return false;
  return true;
}

// All 3-element posets up to isomorphism, plus the smaller ones.
inline std::vector<FinCategory> small_posets() {
  using hforge::cat::poset_category;
  std::vector<FinCategory> out;
  out.push_back(poset_category(1, {}, "pt"));
  out.push_back(poset_category(2, {{0, 1}}, "chain2"));
  out.push_back(poset_category(2, {}, "disc2"));
  out.push_back(poset_category(3, {{0, 1}, {1, 2}}, "chain3"));
  out.push_back(poset_category(3, {}, "disc3"));
  out.push_back(poset_category(3, {{0, 1}, {0, 2}}, "vee"));
  out.push_back(poset_category(3, {{0, 2}, {1, 2}}, "wedge"));
  out.push_back(poset_category(3, {{0, 1}}, "chain2+pt"));
  return out;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracles
