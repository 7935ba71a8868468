#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/report.hpp"

namespace hforge::cat {

using Id = std::int32_t;
constexpr Id kNone = -1;

struct MorphismData {
  Id src = kNone;
  Id tgt = kNone;
};

// A finite category presented by explicit tables. Ids are dense nonnegative
// integers scoped to the structure. compose(g, f) is g∘f, defined exactly
// when src(g) == tgt(f).
struct FinCategory {
  std::string name;
  Id num_objects = 0;
  std::vector<MorphismData> morphisms;
  std::vector<Id> identity;            // object -> morphism
  std::vector<Id> compose_table;       // dense m*m, kNone where undefined

  Id num_morphisms() const { return static_cast<Id>(morphisms.size()); }
  Id src(Id f) const { return morphisms[f].src; }
  Id tgt(Id f) const { return morphisms[f].tgt; }
  bool composable(Id g, Id f) const { return src(g) == tgt(f); }
  Id compose(Id g, Id f) const {
    return compose_table[static_cast<std::size_t>(g) * morphisms.size() + f];
  }
  void set_compose(Id g, Id f, Id gf) {
    compose_table[static_cast<std::size_t>(g) * morphisms.size() + f] = gf;
  }
  bool is_identity(Id f) const { return identity[src(f)] == f && src(f) == tgt(f); }

  std::vector<Id> hom(Id x, Id y) const;
  bool is_iso(Id f) const;              // two-sided inverse exists
  std::vector<Id> isos(Id x, Id y) const;
};

// Throws StructuralError on dangling ids or tables of the wrong shape.
void check_wellformed(const FinCategory& c);

// Axiom validation for 1-categories: composition defined exactly on
// composable pairs, src/tgt of composites, units, associativity.
ValidationReport validate_category(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

// Builders used across the test surface.
FinCategory poset_category(Id n, const std::vector<std::pair<Id, Id>>& relations,
                           const std::string& name = "");
FinCategory chain_poset(Id n);                 // 0 -> 1 -> ... -> n-1
FinCategory discrete_category(Id n);
FinCategory monoid_category(const std::vector<std::vector<Id>>& mult,
                            Id unit, const std::string& name = "");
FinCategory product_category(const FinCategory& a, const FinCategory& b);

// Relabels objects by perm (object i becomes perm[i]) and morphisms by
// mperm; used by canonicalization-invariance checks.
FinCategory relabel(const FinCategory& c, const std::vector<Id>& obj_perm,
                    const std::vector<Id>& mor_perm);

struct CatFunctor {
  std::vector<Id> obj;  // objects of A -> objects of B
  std::vector<Id> mor;  // morphisms of A -> morphisms of B
};

ValidationReport validate_functor(const CatFunctor& f, const FinCategory& a,
                                  const FinCategory& b);
CatFunctor identity_functor(const FinCategory& a);

}  // namespace hforge::cat
