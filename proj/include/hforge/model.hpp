#pragma once

#include <map>
#include <optional>

#include "hforge/diagram.hpp"
#include "hforge/fincat.hpp"

namespace hforge::model {

using cat::CatFunctor;
using cat::FinCategory;
using cat::Id;
using cat::kNone;
using hforge::ValidationReport;

// A candidate model structure: three morphism classes over a finite base.
struct ModelStructure {
  FinCategory base;
  std::vector<char> in_w, in_f, in_c;  // per morphism id

  bool w(Id f) const { return in_w[f]; }
  bool f_(Id f) const { return in_f[f]; }
  bool c(Id f) const { return in_c[f]; }

  std::vector<Id> class_w() const;
  std::vector<Id> class_f() const;
  std::vector<Id> class_c() const;

  static ModelStructure from_sets(FinCategory base, const std::vector<Id>& w,
                                  const std::vector<Id>& f, const std::vector<Id>& c);
};

struct ValidateOptions {
  bool check_bicomplete = true;
  int shape_object_bound = 3;  // diagram shapes used for bicompleteness
};

// Full axiom check. Each failure carries the axiom name and a witness.
// The retract axiom is checked in its raw quantifier form (section and
// retraction equations plus endpoint conditions, no square commutativity).
// Lifting requires the square p∘f = g∘i to commute; the raw form without
// that hypothesis would make any category with a non-commuting candidate
// square fail, so it is not used.
ValidationReport validate_model_structure(const ModelStructure& m,
                                          const ValidateOptions& opt = {});

// Bicompleteness of the base alone (shared by every candidate triple).
ValidationReport check_bicompleteness(const FinCategory& base, int shape_object_bound = 3);

// All triples (W,F,C) passing validation, in canonical (lexicographic
// bitmask) order. Throws BoundError when the base has more morphisms than
// max_morphisms. thread count 0 means use HFORGE_THREADS or hardware.
std::vector<ModelStructure> enumerate_model_structures(const FinCategory& base,
                                                       int max_morphisms = 12,
                                                       int threads = 0);

struct ReplacementWitness {
  Id object = kNone;       // X
  Id replacement = kNone;  // QX or RX
  Id connecting = kNone;   // QX -> X (cofibrant) or X -> RX (fibrant)
  bool fibrant_kind = false;
};

bool is_cofibrant(const ModelStructure& m, Id x);
bool is_fibrant(const ModelStructure& m, Id x);

// Lexicographically smallest witness (by replacement object, then factor
// morphisms). Existence follows from the factorization axiom; absence on a
// validated structure raises InternalConsistencyError.
ReplacementWitness replacement(const ModelStructure& m, Id x, bool fibrant_kind);

struct HomotopyWitness {
  Id cylinder = kNone;
  Id i0 = kNone, i1 = kNone;  // A -> I
  Id p = kNone;               // I -> A, in W
  Id h = kNone;               // I -> X
};

struct HomotopyClasses {
  std::vector<Id> hom;                  // morphisms A -> X
  std::vector<int> class_of;            // parallel to hom
  int num_classes = 0;
  // witness found for directly related pairs (before transitive closure)
  std::map<std::pair<Id, Id>, HomotopyWitness> witnesses;

  int class_of_morphism(Id f) const;
};

HomotopyClasses homotopy_classes(const ModelStructure& m, Id a, Id x);

// Raw related-pair search without the cofibrant/fibrant precondition or
// closure; used by relation property tests.
bool homotopic_witness_exists(const ModelStructure& m, Id f, Id g,
                              HomotopyWitness* out = nullptr);

struct HoCategory {
  FinCategory cat;                     // objects = base objects
  std::vector<Id> rq;                  // bifibrant replacement object per object
  // morphism id in cat -> representative morphism RQA -> RQB in base
  std::vector<Id> representative;
};

HoCategory homotopy_category(const ModelStructure& m);

struct WordOracleResult {
  // class count per (src, tgt) object pair at maxLen
  std::vector<std::vector<int>> hom_classes;
  bool stabilized = false;
};

WordOracleResult localization_words_oracle(const FinCategory& base,
                                           const std::vector<Id>& w, int max_len,
                                           std::size_t word_budget = 2000000);

struct AdjunctionData {
  CatFunctor left;   // L : M -> M'
  CatFunctor right;  // R : M' -> M
  // phi[x][y] lists (h : LX -> Y, phi(h) : X -> RY)
  std::vector<std::vector<std::vector<std::pair<Id, Id>>>> phi;
};

AdjunctionData identity_adjunction(const FinCategory& base);

ValidationReport validate_quillen_functor(const ModelStructure& m,
                                          const ModelStructure& m2,
                                          const AdjunctionData& adj);

}  // namespace hforge::model
