#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/report.hpp"

namespace hforge::grp {

using Int = std::int64_t;

// Integer matrix in row-major order.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  static IntMatrix zero(int r, int c) { return {r, c, std::vector<Int>(std::size_t(r) * c, 0)}; }
  static IntMatrix identity(int n);
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal with
// d1 | d2 | ... Nonnegative diagonal.
struct SmithResult {
  IntMatrix d, u, v;
  std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Invariant factors of the abelian group Z^g / column-span(m): the diagonal
// entries > 1 followed by one 0 per free rank. [] is the trivial group.
std::vector<Int> abelian_invariants(const IntMatrix& relations, int generators);

// Finitely presented abelian group A = Z^g / L where L is the lattice
// spanned by the columns of `relations`. Supports the hom checks the
// K-theory layer needs.
struct FpAbelianGroup {
  int generators = 0;
  IntMatrix relations;  // g x r
  std::vector<Int> invariants() const { return abelian_invariants(relations, generators); }
};

// Is the vector v in the lattice spanned by the columns of m?
bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v);

// A homomorphism between presented abelian groups, given on generators.
struct AbelianMap {
  IntMatrix matrix;  // target.generators x source.generators
};

// Well-defined: every source relation maps into the target relation lattice.
bool abelian_map_well_defined(const FpAbelianGroup& src, const FpAbelianGroup& tgt,
                              const AbelianMap& f);
bool abelian_map_is_zero(const FpAbelianGroup& tgt, const AbelianMap& f);
bool abelian_map_surjective(const FpAbelianGroup& tgt, const AbelianMap& f);
bool abelian_map_injective(const FpAbelianGroup& src, const FpAbelianGroup& tgt,
                           const AbelianMap& f);
bool abelian_maps_equal(const FpAbelianGroup& tgt, const AbelianMap& f, const AbelianMap& g);
AbelianMap abelian_compose(const AbelianMap& g, const AbelianMap& f);

// Words are sequences of signed generator indices: +k means generator k,
// -k-1 ... we store (index, exponent sign) pairs flattened: value v with
// v >= 0 is generator v, v < 0 is inverse of generator -v-1.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word word_free_reduce(const Word& w);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> generator_names;  // optional

  std::vector<Int> abelian_invariant_factors() const;
  FpAbelianGroup abelianized() const;
};

// Bounded Tietze simplification: free/cyclic reduction, duplicate and
// trivial relator removal, elimination of generators with a single
// occurrence in some relator. Budgeted by step count.
GroupPresentation tietze_simplify(const GroupPresentation& p, int max_steps = 200);

// Multiplication-table groups (used for pi_1 cross-checks).
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mult;
  int unit = 0;

  int inverse(int g) const;
};

bool is_group_table(const FiniteGroupTable& g);
bool groups_isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b);
std::vector<Int> abelianization_of_table(const FiniteGroupTable& g);

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable klein_four_group();
FiniteGroupTable symmetric_group_3();
// All isomorphism types of groups with order <= 6.
std::vector<FiniteGroupTable> groups_up_to_order_6();

}  // namespace hforge::grp
