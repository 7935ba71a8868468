#pragma once

#include <map>

#include "hforge/fincat.hpp"

namespace hforge::cat {

// A strict n-category presented by explicit tables: cells per level,
// source/target one level down, identities one level up, and a partial
// composition table per pair p < m.
struct NCategory {
  std::string name;
  int n = 0;
  std::vector<Id> cell_count;              // size n+1
  std::vector<std::vector<Id>> src;        // src[m]: A_m -> A_{m-1}, 1 <= m <= n
  std::vector<std::vector<Id>> tgt;
  std::vector<std::vector<Id>> ident;      // ident[m]: A_m -> A_{m+1}, 0 <= m < n
  std::map<std::pair<int, int>, std::vector<Id>> comp;  // (m,p) -> dense table

  Id cells(int m) const { return cell_count[m]; }
  const std::vector<Id>& comp_table(int m, int p) const { return comp.at({m, p}); }
  std::vector<Id>& comp_table(int m, int p) { return comp.at({m, p}); }
  Id compose(int m, int p, Id a2, Id a1) const {
    return comp_table(m, p)[static_cast<std::size_t>(a2) * cells(m) + a1];
  }
  void set_compose(int m, int p, Id a2, Id a1, Id r) {
    comp_table(m, p)[static_cast<std::size_t>(a2) * cells(m) + a1] = r;
  }
  // k-fold source/target of a level-m cell, landing at level m-k.
  Id src_iter(int m, Id a, int k) const;
  Id tgt_iter(int m, Id a, int k) const;
  Id ident_iter(int m, Id a, int k) const;  // k-fold identity, landing at m+k
  bool fibred(int m, int p, Id a2, Id a1) const {
    return src_iter(m, a2, m - p) == tgt_iter(m, a1, m - p);
  }
};

struct NFunctor {
  std::vector<std::vector<Id>> map;  // map[m]: A_m -> B_m
};

void check_wellformed(const NCategory& a);

// All axiom groups: composition domain, globularity, source/target of
// composites, identity endpoints, units, associativity, identity
// functoriality, interchange. Witnesses carry the offending cell tuple.
ValidationReport validate_ncategory(const NCategory& a);

ValidationReport validate_nfunctor(const NFunctor& f, const NCategory& a,
                                   const NCategory& b);

NCategory from_fincategory(const FinCategory& c);
FinCategory to_fincategory(const NCategory& a);  // requires n == 1

// One-object, one-1-cell strict 2-category whose 2-cells form the given
// commutative monoid under both compositions.
NCategory two_category_from_commutative_monoid(const std::vector<std::vector<Id>>& mult,
                                               Id unit);

// One object; 1-cells form the given monoid; 2-cells are just identities.
NCategory two_category_from_monoid_identities(const std::vector<std::vector<Id>>& mult,
                                              Id unit);

NFunctor identity_nfunctor(const NCategory& a);
NFunctor constant_nfunctor(const NCategory& a, const NCategory& b);  // b one cell per level

}  // namespace hforge::cat
