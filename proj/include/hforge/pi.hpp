#pragma once

#include "hforge/group_theory.hpp"
#include "hforge/sset.hpp"

namespace hforge::sset {

// Carrier, equivalence classes and (for n >= 1) the multiplication of the
// n-th simplicial homotopy group of a pointed Kan complex.
struct HomotopyGroupResult {
  int n = 0;
  std::vector<Id> carrier;            // simplices of level n in I_n
  std::vector<int> class_of;          // parallel to carrier
  int num_classes = 0;
  int identity_class = 0;
  std::vector<std::vector<int>> mult;  // class x class -> class; empty for n = 0
  std::vector<int> inverse;            // per class; empty for n = 0

  int class_of_simplex(Id y) const;
  grp::FiniteGroupTable as_table(const std::string& name) const;
};

// The carrier I_n: level-n simplices whose faces are all at the basepoint.
std::vector<Id> pi_carrier(const PointedSSet& x, int n);

// Connected components of the 1-skeleton; no Kan hypothesis. Used both for
// pi_0 and for component bookkeeping elsewhere.
std::vector<int> path_components(const TruncatedSSet& x);

// Full homotopy group computation. Requires x Kan up to level n+1 (checked
// via is_kan; PreconditionError otherwise) and, for n >= 1 multiplication,
// n+1 <= truncation. Verifies: the witness relation is an equivalence
// relation on I_n, products are independent of the filler and of
// representatives, group axioms hold, and the group is abelian for n >= 2.
HomotopyGroupResult simplicial_pi(const PointedSSet& x, int n);

// The relation witness search alone: is there a simplex relating y and z.
bool pi_related(const PointedSSet& x, int n, Id y, Id z);

struct InducedHom {
  // class index of source -> class index of target
  std::vector<int> on_classes;
  bool is_homomorphism = false;
  bool is_isomorphism = false;
};

// Map on homotopy groups induced by a pointed simplicial map.
InducedHom pi_of_map(const SimplicialMap& f, const PointedSSet& x, const PointedSSet& y,
                     int n, const HomotopyGroupResult& pix, const HomotopyGroupResult& piy);

// Edge-path presentation of the fundamental group of the basepoint
// component: generators are nondegenerate edges, relations from a spanning
// tree, degenerate edges and all 2-simplices. Needs truncation >= 2.
struct Pi1Presentation {
  grp::GroupPresentation raw;
  grp::GroupPresentation simplified;
  std::vector<grp::Int> abelian_invariants;
  std::vector<Id> generator_edges;     // edge id per raw generator
  std::vector<char> in_component;      // per vertex
  std::vector<Id> tree_parent_edge;    // per vertex, kNone at the root
  bool ignored_other_components = false;
};

Pi1Presentation fundamental_group_presentation(const PointedSSet& x, int tietze_budget = 200);

// Helpers for transporting pi_1 classes along simplicial maps.
//
// A traversal is a list of (edge, forward) steps. Under the composition
// order convention used by the 2-simplex relations, the class word of a
// loop spells its edges last step first.
grp::Word pi1_word_for_path(const Pi1Presentation& pres, const TruncatedSSet& x,
                            const std::vector<std::pair<Id, bool>>& path);

// Canonical loop at the basepoint representing a generator edge: tree path
// to its source, the edge itself, tree path back from its target.
std::vector<std::pair<Id, bool>> pi1_canonical_loop(const Pi1Presentation& pres,
                                                    const TruncatedSSet& x, Id edge,
                                                    Id basepoint);

}  // namespace hforge::sset
