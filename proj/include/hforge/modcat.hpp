#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hforge/report.hpp"

namespace hforge::modcat {

using Int = std::int64_t;

// A finite Z/m-module in invariant factor form: factors d_1 | d_2 | ...,
// each dividing m and at least 2. The zero module has no factors.
struct ModObject {
  std::vector<Int> factors;

  Int order() const {
    Int r = 1;
    for (Int d : factors) r *= d;
    return r;
  }
  int rank() const { return static_cast<int>(factors.size()); }
  bool operator==(const ModObject& o) const { return factors == o.factors; }
  bool operator<(const ModObject& o) const;
};

// Invariant factor form of a multiset of cyclic orders (each > 1).
ModObject canonical_form(std::vector<Int> cyclic_orders, Int modulus);

// Morphisms are matrices: mat[r][c] with rows indexed by target factors and
// columns by source factors, entries reduced modulo the row's factor.
// Well-definedness requires mat[r][c] divisible by tgt_r / gcd(src_c, tgt_r).
struct ModMorphism {
  int src = -1, tgt = -1;  // object indices in a ModCategory
  std::vector<Int> mat;    // row-major, rows = tgt rank, cols = src rank

  bool operator==(const ModMorphism& o) const {
    return src == o.src && tgt == o.tgt && mat == o.mat;
  }
  bool operator<(const ModMorphism& o) const {
    return std::tie(src, tgt, mat) < std::tie(o.src, o.tgt, o.mat);
  }
};

// Elements of an object are encoded as mixed-radix indices over its factors.
using Element = Int;

// The category of Z/m-modules of order up to the bound, skeletal on
// canonical forms.
struct ModCategory {
  Int modulus = 0;
  Int order_bound = 0;
  std::vector<ModObject> objects;  // sorted, index 0 is the zero module

  static ModCategory universe(Int modulus, Int order_bound);

  int index_of(const ModObject& o) const;  // -1 when absent

  Int order(int obj) const { return objects[obj].order(); }
  std::vector<Int> coords(int obj, Element e) const;
  Element element(int obj, const std::vector<Int>& coords) const;

  Element apply(const ModMorphism& f, Element e) const;
  ModMorphism compose(const ModMorphism& g, const ModMorphism& f) const;
  ModMorphism identity(int obj) const;
  ModMorphism zero_morphism(int src, int tgt) const;
  ModMorphism add(const ModMorphism& f, const ModMorphism& g) const;
  ModMorphism negate(const ModMorphism& f) const;
  bool well_defined(const ModMorphism& f) const;

  std::vector<ModMorphism> hom(int src, int tgt) const;
  Int hom_size(int src, int tgt) const;

  bool injective(const ModMorphism& f) const;
  bool surjective(const ModMorphism& f) const;
  std::vector<Element> image(const ModMorphism& f) const;          // sorted
  std::vector<Element> kernel_elements(const ModMorphism& f) const;  // sorted

  // Morphism from an elementwise additive map given on all source elements.
  ModMorphism from_element_map(int src, int tgt,
                               const std::vector<Element>& images) const;

  // Decomposition of a subgroup (given by its sorted element list) of an
  // object: canonical form plus an injective morphism realizing it.
  struct SubgroupPresentation {
    ModObject shape;
    ModMorphism embedding;  // shape -> ambient, image = the subgroup
  };
  SubgroupPresentation decompose_subgroup(int obj,
                                          const std::vector<Element>& elems) const;

  // Quotient by a subgroup: canonical form plus the projection.
  struct QuotientPresentation {
    ModObject shape;
    ModMorphism projection;  // ambient -> shape, kernel = the subgroup
  };
  QuotientPresentation quotient_by(int obj, const std::vector<Element>& elems) const;

  // Kernel and cokernel as canonical objects with the structural morphism.
  SubgroupPresentation kernel(const ModMorphism& f) const;
  QuotientPresentation cokernel(const ModMorphism& f) const;

  // Biproduct with its injections and projections, canonicalized. Returns
  // nothing when the result exceeds the order bound.
  struct Biproduct {
    int object;
    ModMorphism in1, in2, pr1, pr2;
  };
  std::optional<Biproduct> biproduct(int a, int b) const;

  // Pullback of an epi j : N' -> M along a mono i : N -> M, presented on
  // the canonical object; legs (to N, to N') commute with j, i.
  struct PullbackData {
    int object;
    ModMorphism to_mono_src;  // P -> N
    ModMorphism to_epi_src;   // P -> N'
  };
  PullbackData pullback_epi_along_mono(const ModMorphism& epi,
                                       const ModMorphism& mono) const;

  // General fibre product {(a, b) : f(a) = g(b)} for f : A -> C, g : B -> C,
  // as a subgroup presentation of the (possibly out-of-universe) sum; only
  // valid when the result order is within the bound.
  struct FibreProduct {
    int object;
    ModMorphism to_a, to_b;
  };
  std::optional<FibreProduct> fibre_product(const ModMorphism& f,
                                            const ModMorphism& g) const;

  std::vector<ModMorphism> automorphisms(int obj) const;
  std::vector<ModMorphism> isomorphisms(int a, int b) const;

  // All subgroups of an object, as sorted element lists.
  std::vector<std::vector<Element>> subgroups(int obj) const;
};

}  // namespace hforge::modcat
