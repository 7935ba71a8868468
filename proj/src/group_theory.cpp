#include "hforge/group_theory.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace hforge::grp {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw StructuralError("matmul shape mismatch");
  IntMatrix r = IntMatrix::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  res.d = m;
  res.u = IntMatrix::identity(m.rows);
  res.v = IntMatrix::identity(m.cols);
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](int dst, int src, Int k) {  // row dst += k * row src
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += k * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += k * u.at(src, c);
  };
  auto add_col = [&](int dst, int src, Int k) {
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += k * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += k * v.at(r, src);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  };

  const int steps = std::min(d.rows, d.cols);
  for (int t = 0; t < steps; ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j)
        if (d.at(i, j) != 0 &&
            (pi == -1 || std::llabs(d.at(i, j)) < std::llabs(d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        add_row(i, t, -q);
        if (d.at(i, t) != 0) {
          swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col(j, t, -q);
        if (d.at(t, j) != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
    }
    if (d.at(t, t) < 0) negate_row(t);
  }

  // enforce divisibility d_t | d_{t+1}
  for (int t = 0; t + 1 < steps; ++t) {
    if (d.at(t, t) == 0) continue;
    for (int s = t + 1; s < steps; ++s) {
      if (d.at(s, s) % d.at(t, t) == 0) continue;
      // fold d_s into column t, redo the pivot dance at t
      add_col(t, s, 1);
      bool again = true;
      while (again) {
        again = false;
        for (int i = t + 1; i < d.rows; ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = d.at(i, t) / d.at(t, t);
          add_row(i, t, -q);
          if (d.at(i, t) != 0) {
            swap_rows(t, i);
            again = true;
          }
        }
        for (int j = t + 1; j < d.cols; ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = d.at(t, j) / d.at(t, t);
          add_col(j, t, -q);
          if (d.at(t, j) != 0) {
            swap_cols(t, j);
            again = true;
          }
        }
      }
      if (d.at(t, t) < 0) negate_row(t);
    }
  }
  for (int t = 0; t < steps; ++t)
    if (d.at(t, t) < 0) negate_row(t);
  return res;
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  for (int i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
  return out;
}

std::vector<Int> abelian_invariants(const IntMatrix& relations, int generators) {
  if (relations.rows != generators) throw StructuralError("relation matrix row count != generators");
  std::vector<Int> out;
  int rank = 0;
  if (relations.cols > 0) {
    auto snf = smith_normal_form(relations);
    for (Int d : snf.diagonal()) {
      if (d == 0) continue;
      ++rank;
      if (d > 1) out.push_back(d);
    }
  }
  for (int i = 0; i < generators - rank; ++i) out.push_back(0);
  return out;
}

bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != m.rows) throw StructuralError("vector size != matrix rows");
  if (m.cols == 0) {
    for (Int x : v)
      if (x) return false;
    return true;
  }
  auto snf = smith_normal_form(m);
  // m x = v  <=>  d y = u v
  std::vector<Int> uv(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) uv[i] += snf.u.at(i, j) * v[j];
  int k = std::min(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    Int di = i < k ? snf.d.at(i, i) : 0;
    if (di == 0) {
      if (uv[i] != 0) return false;
    } else if (uv[i] % di != 0) {
      return false;
    }
  }
  return true;
}

bool abelian_map_well_defined(const FpAbelianGroup& src, const FpAbelianGroup& tgt,
                              const AbelianMap& f) {
  if (f.matrix.rows != tgt.generators || f.matrix.cols != src.generators)
    throw StructuralError("abelian map shape mismatch");
  for (int c = 0; c < src.relations.cols; ++c) {
    std::vector<Int> img(tgt.generators, 0);
    for (int i = 0; i < tgt.generators; ++i)
      for (int k = 0; k < src.generators; ++k)
        img[i] += f.matrix.at(i, k) * src.relations.at(k, c);
    if (!in_column_lattice(tgt.relations, img)) return false;
  }
  return true;
}

bool abelian_map_is_zero(const FpAbelianGroup& tgt, const AbelianMap& f) {
  for (int c = 0; c < f.matrix.cols; ++c) {
    std::vector<Int> img(tgt.generators);
    for (int i = 0; i < tgt.generators; ++i) img[i] = f.matrix.at(i, c);
    if (!in_column_lattice(tgt.relations, img)) return false;
  }
  return true;
}

bool abelian_map_surjective(const FpAbelianGroup& tgt, const AbelianMap& f) {
  IntMatrix combined = IntMatrix::zero(tgt.generators, tgt.relations.cols + f.matrix.cols);
  for (int i = 0; i < tgt.generators; ++i) {
    for (int j = 0; j < tgt.relations.cols; ++j) combined.at(i, j) = tgt.relations.at(i, j);
    for (int j = 0; j < f.matrix.cols; ++j)
      combined.at(i, tgt.relations.cols + j) = f.matrix.at(i, j);
  }
  return abelian_invariants(combined, tgt.generators).empty();
}

bool abelian_map_injective(const FpAbelianGroup& src, const FpAbelianGroup& tgt,
                           const AbelianMap& f) {
  // Preimage lattice of tgt.relations under f: x-part of ker [f | -R_tgt].
  const int n = src.generators + tgt.relations.cols;
  IntMatrix big = IntMatrix::zero(tgt.generators, n);
  for (int i = 0; i < tgt.generators; ++i) {
    for (int j = 0; j < src.generators; ++j) big.at(i, j) = f.matrix.at(i, j);
    for (int j = 0; j < tgt.relations.cols; ++j)
      big.at(i, src.generators + j) = -tgt.relations.at(i, j);
  }
  auto snf = smith_normal_form(big);
  int k = std::min(big.rows, big.cols);
  for (int j = 0; j < n; ++j) {
    bool in_kernel = j >= k || snf.d.at(j, j) == 0;
    if (!in_kernel) continue;
    std::vector<Int> x(src.generators);
    for (int i = 0; i < src.generators; ++i) x[i] = snf.v.at(i, j);
    if (!in_column_lattice(src.relations, x)) return false;
  }
  return true;
}

bool abelian_maps_equal(const FpAbelianGroup& tgt, const AbelianMap& f, const AbelianMap& g) {
  if (f.matrix.cols != g.matrix.cols || f.matrix.rows != g.matrix.rows)
    throw StructuralError("abelian map comparison shape mismatch");
  AbelianMap diff{IntMatrix::zero(f.matrix.rows, f.matrix.cols)};
  for (std::size_t i = 0; i < diff.matrix.a.size(); ++i)
    diff.matrix.a[i] = f.matrix.a[i] - g.matrix.a[i];
  return abelian_map_is_zero(tgt, diff);
}

AbelianMap abelian_compose(const AbelianMap& g, const AbelianMap& f) {
  return {matmul(g.matrix, f.matrix)};
}

// Letter encoding: v >= 0 is generator v, v < 0 is the inverse of
// generator -v-1; the involution v -> -v-1 flips a letter.
Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it - 1);
  return out;
}

Word word_free_reduce(const Word& w) {
  Word out;
  for (int v : w) {
    if (!out.empty() && out.back() == -v - 1)
      out.pop_back();
    else
      out.push_back(v);
  }
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = word_free_reduce(w);
  while (w.size() >= 2 && w.front() == (w.back() >= 0 ? -w.back() - 1 : -w.back() - 1)) {
    w.erase(w.begin());
    w.pop_back();
    w = word_free_reduce(w);
  }
  return w;
}

int gen_of(int v) { return v >= 0 ? v : -v - 1; }

Word substitute(const Word& w, int gen, const Word& value) {
  // replace every occurrence of `gen` by `value` (inverted for negatives)
  Word out;
  Word value_inv = word_inverse(value);
  for (int v : w) {
    if (gen_of(v) != gen) {
      out.push_back(v);
      continue;
    }
    const Word& rep = (v >= 0) ? value : value_inv;
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return word_free_reduce(out);
}

Word drop_generator_renumber(const Word& w, int gen) {
  Word out;
  for (int v : w) {
    int g = gen_of(v);
    if (g == gen) throw InternalConsistencyError("dropping generator still in use");
    int g2 = g > gen ? g - 1 : g;
    out.push_back(v >= 0 ? g2 : -g2 - 1);
  }
  return out;
}

}  // namespace

std::vector<Int> GroupPresentation::abelian_invariant_factors() const {
  return abelianized().invariants();
}

FpAbelianGroup GroupPresentation::abelianized() const {
  FpAbelianGroup g;
  g.generators = generators;
  g.relations = IntMatrix::zero(generators, static_cast<int>(relators.size()));
  for (std::size_t c = 0; c < relators.size(); ++c)
    for (int v : relators[c]) g.relations.at(gen_of(v), static_cast<int>(c)) += (v >= 0 ? 1 : -1);
  return g;
}

GroupPresentation tietze_simplify(const GroupPresentation& p, int max_steps) {
  GroupPresentation cur = p;
  if (cur.generator_names.empty())
    for (int i = 0; i < cur.generators; ++i)
      cur.generator_names.push_back("g" + std::to_string(i));

  auto cleanup = [&]() {
    std::vector<Word> keep;
    std::set<Word> seen;
    for (auto& r : cur.relators) {
      Word w = cyclic_reduce(r);
      if (w.empty()) continue;
      Word wi = cyclic_reduce(word_inverse(w));
      if (seen.count(w) || seen.count(wi)) continue;
      seen.insert(w);
      keep.push_back(std::move(w));
    }
    cur.relators = std::move(keep);
  };

  cleanup();
  int steps = 0;
  bool progress = true;
  while (progress && steps < max_steps) {
    progress = false;
    for (std::size_t ri = 0; ri < cur.relators.size(); ++ri) {
      const Word& r = cur.relators[ri];
      // count occurrences of each generator in this relator
      std::map<int, int> occ;
      for (int v : r) occ[gen_of(v)]++;
      int candidate = -1;
      for (auto [g, n] : occ)
        if (n == 1) {
          candidate = g;
          break;
        }
      if (candidate < 0) continue;
      // rotate so the candidate occurrence is first: r = g^e w, so g^e = w^{-1}
      Word rot = r;
      while (gen_of(rot.front()) != candidate)
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      Word rest(rot.begin() + 1, rot.end());
      // g·w = 1 gives g = w^{-1}; g^{-1}·w = 1 gives g = w.
      Word value = rot.front() >= 0 ? word_inverse(rest) : rest;
      // substitute in every other relator, drop this relator and generator
      std::vector<Word> next;
      for (std::size_t j = 0; j < cur.relators.size(); ++j) {
        if (j == ri) continue;
        next.push_back(drop_generator_renumber(substitute(cur.relators[j], candidate, value),
                                               candidate));
      }
      cur.relators = std::move(next);
      cur.generator_names.erase(cur.generator_names.begin() + candidate);
      cur.generators -= 1;
      cleanup();
      ++steps;
      progress = true;
      break;
    }
  }
  return cur;
}

int FiniteGroupTable::inverse(int g) const {
  for (int h = 0; h < order; ++h)
    if (mult[g][h] == unit && mult[h][g] == unit) return h;
  throw StructuralError("element has no inverse");
}

bool is_group_table(const FiniteGroupTable& g) {
  const int n = g.order;
  if (static_cast<int>(g.mult.size()) != n) return false;
  for (const auto& row : g.mult) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int x = 0; x < n; ++x)
    if (g.mult[g.unit][x] != x || g.mult[x][g.unit] != x) return false;
  for (int x = 0; x < n; ++x) {
    bool has_inv = false;
    for (int y = 0; y < n; ++y)
      if (g.mult[x][y] == g.unit && g.mult[y][x] == g.unit) has_inv = true;
    if (!has_inv) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mult[g.mult[x][y]][z] != g.mult[x][g.mult[y][z]]) return false;
  return true;
}

bool groups_isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  if (a.order != b.order) return false;
  const int n = a.order;
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  perm[a.unit] = b.unit;
  used[b.unit] = 1;
  std::vector<int> free_elems;
  for (int i = 0; i < n; ++i)
    if (i != a.unit) free_elems.push_back(i);

  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (perm[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (perm[y] < 0) continue;
        int xy = a.mult[x][y];
        if (perm[xy] >= 0 && b.mult[perm[x]][perm[y]] != perm[xy]) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == free_elems.size()) return consistent();
    int x = free_elems[k];
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      perm[x] = y;
      used[y] = 1;
      if (consistent() && self(self, k + 1)) return true;
      used[y] = 0;
      perm[x] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<Int> abelianization_of_table(const FiniteGroupTable& g) {
  // Cayley presentation: one generator per element, relation x + y = xy.
  GroupPresentation p;
  p.generators = g.order;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      Word w = {x, y, -g.mult[x][y] - 1};
      p.relators.push_back(w);
    }
  return p.abelian_invariant_factors();
}

FiniteGroupTable cyclic_group(int n) {
  FiniteGroupTable g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.unit = 0;
  g.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
  return g;
}

FiniteGroupTable klein_four_group() {
  FiniteGroupTable g;
  g.name = "V4";
  g.order = 4;
  g.unit = 0;
  g.mult.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.mult[i][j] = i ^ j;
  return g;
}

FiniteGroupTable symmetric_group_3() {
  // permutations of {0,1,2} listed as: e, (01), (02), (12), (012), (021)
  auto apply = [](const std::array<int, 3>& p, const std::array<int, 3>& q) {
    return std::array<int, 3>{p[q[0]], p[q[1]], p[q[2]]};
  };
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroupTable g;
  g.name = "S3";
  g.order = 6;
  g.unit = 0;
  g.mult.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto r = apply(perms[i], perms[j]);
      for (int k = 0; k < 6; ++k)
        if (perms[k] == r) g.mult[i][j] = k;
    }
  return g;
}

std::vector<FiniteGroupTable> groups_up_to_order_6() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_four_group(), cyclic_group(5), cyclic_group(6), symmetric_group_3()};
}

}  // namespace hforge::grp
