#include "hforge/ncat.hpp"

namespace hforge::cat {

Id NCategory::src_iter(int m, Id a, int k) const {
  for (int i = 0; i < k; ++i) a = src[m - i][a];
  return a;
}

Id NCategory::tgt_iter(int m, Id a, int k) const {
  for (int i = 0; i < k; ++i) a = tgt[m - i][a];
  return a;
}

Id NCategory::ident_iter(int m, Id a, int k) const {
  for (int i = 0; i < k; ++i) a = ident[m + i][a];
  return a;
}

void check_wellformed(const NCategory& a) {
  if (a.n < 0) throw StructuralError("negative n");
  if (static_cast<int>(a.cell_count.size()) != a.n + 1)
    throw StructuralError("cell_count size != n+1");
  if (static_cast<int>(a.src.size()) != a.n + 1 || static_cast<int>(a.tgt.size()) != a.n + 1)
    throw StructuralError("src/tgt table count != n+1");
  if (static_cast<int>(a.ident.size()) != std::max(a.n, 0))
    throw StructuralError("identity table count != n");
  for (int m = 1; m <= a.n; ++m) {
    if (static_cast<Id>(a.src[m].size()) != a.cells(m) ||
        static_cast<Id>(a.tgt[m].size()) != a.cells(m))
      throw StructuralError("src/tgt table size mismatch at level " + std::to_string(m));
    for (Id x : a.src[m])
      if (x < 0 || x >= a.cells(m - 1)) throw StructuralError("dangling src id");
    for (Id x : a.tgt[m])
      if (x < 0 || x >= a.cells(m - 1)) throw StructuralError("dangling tgt id");
  }
  for (int m = 0; m < a.n; ++m) {
    if (static_cast<Id>(a.ident[m].size()) != a.cells(m))
      throw StructuralError("identity table size mismatch at level " + std::to_string(m));
    for (Id x : a.ident[m])
      if (x < 0 || x >= a.cells(m + 1)) throw StructuralError("dangling identity id");
  }
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p) {
      auto it = a.comp.find({m, p});
      if (it == a.comp.end())
        throw StructuralError("missing composition table (" + std::to_string(m) + "," +
                              std::to_string(p) + ")");
      if (it->second.size() != static_cast<std::size_t>(a.cells(m)) * a.cells(m))
        throw StructuralError("composition table shape mismatch");
      for (Id x : it->second)
        if (x != kNone && (x < 0 || x >= a.cells(m))) throw StructuralError("dangling composite id");
    }
}

ValidationReport validate_ncategory(const NCategory& a) {
  check_wellformed(a);
  ValidationReport rep;

  // Globularity, m >= 2.
  for (int m = 2; m <= a.n; ++m)
    for (Id c = 0; c < a.cells(m); ++c) {
      Id ss = a.src[m - 1][a.src[m][c]], st = a.src[m - 1][a.tgt[m][c]];
      Id ts = a.tgt[m - 1][a.src[m][c]], tt = a.tgt[m - 1][a.tgt[m][c]];
      if (ss != st)
        rep.add("globularity", "ss != st at level " + std::to_string(m), {c, ss, st});
      if (ts != tt)
        rep.add("globularity", "ts != tt at level " + std::to_string(m), {c, ts, tt});
    }

  // Composition defined exactly on fibred pairs.
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id a2 = 0; a2 < a.cells(m); ++a2)
        for (Id a1 = 0; a1 < a.cells(m); ++a1) {
          Id r = a.compose(m, p, a2, a1);
          bool fib = a.fibred(m, p, a2, a1);
          if (fib && r == kNone)
            rep.add("composition-domain",
                    "fibred pair has no composite at (m,p)=(" + std::to_string(m) + "," +
                        std::to_string(p) + ")",
                    {a2, a1});
          if (!fib && r != kNone)
            rep.add("composition-domain",
                    "composite defined on non-fibred pair at (m,p)=(" + std::to_string(m) +
                        "," + std::to_string(p) + ")",
                    {a2, a1});
        }

  // Source and target of composites.
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id a2 = 0; a2 < a.cells(m); ++a2)
        for (Id a1 = 0; a1 < a.cells(m); ++a1) {
          if (!a.fibred(m, p, a2, a1)) continue;
          Id r = a.compose(m, p, a2, a1);
          if (r == kNone) continue;
          if (m == p + 1) {
            if (a.src[m][r] != a.src[m][a1])
              rep.add("composite-src", "s(a2∘a1) != s(a1)", {a2, a1, r});
            if (a.tgt[m][r] != a.tgt[m][a2])
              rep.add("composite-tgt", "t(a2∘a1) != t(a2)", {a2, a1, r});
          } else {
            Id sc = a.compose(m - 1, p, a.src[m][a2], a.src[m][a1]);
            Id tc = a.compose(m - 1, p, a.tgt[m][a2], a.tgt[m][a1]);
            if (sc == kNone || a.src[m][r] != sc)
              rep.add("composite-src", "s(a2∘a1) != s(a2)∘s(a1)", {a2, a1, r});
            if (tc == kNone || a.tgt[m][r] != tc)
              rep.add("composite-tgt", "t(a2∘a1) != t(a2)∘t(a1)", {a2, a1, r});
          }
        }

  // s(id) = a = t(id).
  for (int m = 0; m < a.n; ++m)
    for (Id c = 0; c < a.cells(m); ++c) {
      Id e = a.ident[m][c];
      if (a.src[m + 1][e] != c || a.tgt[m + 1][e] != c)
        rep.add("identity-endpoints", "s(id_a) or t(id_a) != a at level " + std::to_string(m),
                {c, e});
    }

  // Unit laws with iterated identities of the p-level boundaries.
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id c = 0; c < a.cells(m); ++c) {
        Id left = a.ident_iter(p, a.tgt_iter(m, c, m - p), m - p);
        Id right = a.ident_iter(p, a.src_iter(m, c, m - p), m - p);
        if (a.compose(m, p, left, c) != c)
          rep.add("unit", "id(t^k a)∘a != a at (m,p)=(" + std::to_string(m) + "," +
                              std::to_string(p) + ")",
                  {c, left});
        if (a.compose(m, p, c, right) != c)
          rep.add("unit", "a∘id(s^k a) != a at (m,p)=(" + std::to_string(m) + "," +
                              std::to_string(p) + ")",
                  {c, right});
      }

  // Associativity.
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id a3 = 0; a3 < a.cells(m); ++a3)
        for (Id a2 = 0; a2 < a.cells(m); ++a2) {
          if (!a.fibred(m, p, a3, a2)) continue;
          for (Id a1 = 0; a1 < a.cells(m); ++a1) {
            if (!a.fibred(m, p, a2, a1)) continue;
            Id a32 = a.compose(m, p, a3, a2);
            Id a21 = a.compose(m, p, a2, a1);
            if (a32 == kNone || a21 == kNone) continue;
            if (a.compose(m, p, a32, a1) != a.compose(m, p, a3, a21))
              rep.add("associativity",
                      "(a3∘a2)∘a1 != a3∘(a2∘a1) at (m,p)=(" + std::to_string(m) + "," +
                          std::to_string(p) + ")",
                      {a3, a2, a1});
          }
        }

  // Identities are functorial for each composition.
  for (int m = 1; m < a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id a2 = 0; a2 < a.cells(m); ++a2)
        for (Id a1 = 0; a1 < a.cells(m); ++a1) {
          if (!a.fibred(m, p, a2, a1)) continue;
          Id c = a.compose(m, p, a2, a1);
          if (c == kNone) continue;
          Id lhs = a.compose(m + 1, p, a.ident[m][a2], a.ident[m][a1]);
          if (lhs != a.ident[m][c])
            rep.add("identity-functorial",
                    "id(a2)∘id(a1) != id(a2∘a1) at (m,p)=(" + std::to_string(m) + "," +
                        std::to_string(p) + ")",
                    {a2, a1});
        }

  // Interchange for q < p < m.
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < p; ++q) {
        std::vector<std::pair<Id, Id>> p_pairs;
        for (Id x = 0; x < a.cells(m); ++x)
          for (Id y = 0; y < a.cells(m); ++y)
            if (a.fibred(m, p, x, y)) p_pairs.push_back({x, y});
        for (auto [b2, b1] : p_pairs)
          for (auto [c2, c1] : p_pairs) {
            if (!a.fibred(m, q, b2, c2) || !a.fibred(m, q, b1, c1)) continue;
            Id bp = a.compose(m, p, b2, b1);
            Id cp = a.compose(m, p, c2, c1);
            Id bq = a.compose(m, q, b2, c2);
            Id aq = a.compose(m, q, b1, c1);
            if (bp == kNone || cp == kNone || bq == kNone || aq == kNone) continue;
            Id lhs = a.compose(m, q, bp, cp);
            Id rhs = a.compose(m, p, bq, aq);
            if (lhs == kNone || rhs == kNone || lhs != rhs)
              rep.add("interchange",
                      "(b2∘_p b1)∘_q(c2∘_p c1) != (b2∘_q c2)∘_p(b1∘_q c1) at (m,p,q)=(" +
                          std::to_string(m) + "," + std::to_string(p) + "," +
                          std::to_string(q) + ")",
                      {b2, b1, c2, c1});
          }
      }

  return rep;
}

ValidationReport validate_nfunctor(const NFunctor& f, const NCategory& a,
                                   const NCategory& b) {
  if (a.n != b.n) throw StructuralError("n-functor between different dimensions");
  if (static_cast<int>(f.map.size()) != a.n + 1)
    throw StructuralError("n-functor level map count mismatch");
  for (int m = 0; m <= a.n; ++m) {
    if (static_cast<Id>(f.map[m].size()) != a.cells(m))
      throw StructuralError("n-functor map size mismatch at level " + std::to_string(m));
    for (Id x : f.map[m])
      if (x < 0 || x >= b.cells(m)) throw StructuralError("n-functor maps to dangling id");
  }

  ValidationReport rep;
  for (int m = 1; m <= a.n; ++m)
    for (Id c = 0; c < a.cells(m); ++c) {
      if (f.map[m - 1][a.src[m][c]] != b.src[m][f.map[m][c]])
        rep.add("functor-src", "F(s a) != s(F a) at level " + std::to_string(m), {c});
      if (f.map[m - 1][a.tgt[m][c]] != b.tgt[m][f.map[m][c]])
        rep.add("functor-tgt", "F(t a) != t(F a) at level " + std::to_string(m), {c});
    }
  for (int m = 0; m < a.n; ++m)
    for (Id c = 0; c < a.cells(m); ++c)
      if (f.map[m + 1][a.ident[m][c]] != b.ident[m][f.map[m][c]])
        rep.add("functor-id", "F(id a) != id(F a) at level " + std::to_string(m), {c});
  for (int m = 1; m <= a.n; ++m)
    for (int p = 0; p < m; ++p)
      for (Id a2 = 0; a2 < a.cells(m); ++a2)
        for (Id a1 = 0; a1 < a.cells(m); ++a1) {
          if (!a.fibred(m, p, a2, a1)) continue;
          Id c = a.compose(m, p, a2, a1);
          if (c == kNone) continue;
          Id img = b.compose(m, p, f.map[m][a2], f.map[m][a1]);
          if (img == kNone || img != f.map[m][c])
            rep.add("functor-comp",
                    "F(a2∘a1) != F(a2)∘F(a1) at (m,p)=(" + std::to_string(m) + "," +
                        std::to_string(p) + ")",
                    {a2, a1});
        }
  return rep;
}

NCategory from_fincategory(const FinCategory& c) {
  NCategory a;
  a.name = c.name;
  a.n = 1;
  a.cell_count = {c.num_objects, c.num_morphisms()};
  a.src.resize(2);
  a.tgt.resize(2);
  a.ident.resize(1);
  for (Id f = 0; f < c.num_morphisms(); ++f) {
    a.src[1].push_back(c.src(f));
    a.tgt[1].push_back(c.tgt(f));
  }
  a.ident[0] = c.identity;
  a.comp[{1, 0}] = c.compose_table;
  return a;
}

FinCategory to_fincategory(const NCategory& a) {
  if (a.n != 1) throw StructuralError("to_fincategory requires n == 1");
  FinCategory c;
  c.name = a.name;
  c.num_objects = a.cells(0);
  for (Id f = 0; f < a.cells(1); ++f) c.morphisms.push_back({a.src[1][f], a.tgt[1][f]});
  c.identity = a.ident[0];
  c.compose_table = a.comp_table(1, 0);
  return c;
}

NCategory two_category_from_commutative_monoid(const std::vector<std::vector<Id>>& mult,
                                               Id unit) {
  const Id k = static_cast<Id>(mult.size());
  NCategory a;
  a.name = "B2-monoid";
  a.n = 2;
  a.cell_count = {1, 1, k};
  a.src.resize(3);
  a.tgt.resize(3);
  a.ident.resize(2);
  a.src[1] = {0};
  a.tgt[1] = {0};
  a.src[2].assign(k, 0);
  a.tgt[2].assign(k, 0);
  a.ident[0] = {0};
  a.ident[1] = {unit};
  a.comp[{1, 0}] = {0};
  a.comp[{2, 0}].assign(static_cast<std::size_t>(k) * k, kNone);
  a.comp[{2, 1}].assign(static_cast<std::size_t>(k) * k, kNone);
  for (Id x = 0; x < k; ++x)
    for (Id y = 0; y < k; ++y) {
      a.set_compose(2, 0, x, y, mult[x][y]);
      a.set_compose(2, 1, x, y, mult[x][y]);
    }
  return a;
}

NCategory two_category_from_monoid_identities(const std::vector<std::vector<Id>>& mult,
                                              Id unit) {
  const Id k = static_cast<Id>(mult.size());
  NCategory a;
  a.name = "monoid-2cat";
  a.n = 2;
  a.cell_count = {1, k, k};
  a.src.resize(3);
  a.tgt.resize(3);
  a.ident.resize(2);
  a.src[1].assign(k, 0);
  a.tgt[1].assign(k, 0);
  a.src[2].resize(k);
  a.tgt[2].resize(k);
  for (Id i = 0; i < k; ++i) {
    a.src[2][i] = i;
    a.tgt[2][i] = i;
  }
  a.ident[0] = {unit};
  a.ident[1].resize(k);
  for (Id i = 0; i < k; ++i) a.ident[1][i] = i;
  a.comp[{1, 0}].assign(static_cast<std::size_t>(k) * k, kNone);
  a.comp[{2, 0}].assign(static_cast<std::size_t>(k) * k, kNone);
  a.comp[{2, 1}].assign(static_cast<std::size_t>(k) * k, kNone);
  for (Id x = 0; x < k; ++x)
    for (Id y = 0; y < k; ++y) {
      a.set_compose(1, 0, x, y, mult[x][y]);
      a.set_compose(2, 0, x, y, mult[x][y]);
      if (x == y) a.set_compose(2, 1, x, y, x);
    }
  return a;
}

NFunctor identity_nfunctor(const NCategory& a) {
  NFunctor f;
  f.map.resize(a.n + 1);
  for (int m = 0; m <= a.n; ++m) {
    f.map[m].resize(a.cells(m));
    for (Id c = 0; c < a.cells(m); ++c) f.map[m][c] = c;
  }
  return f;
}

NFunctor constant_nfunctor(const NCategory& a, const NCategory& b) {
  for (int m = 0; m <= b.n; ++m)
    if (b.cells(m) != 1) throw StructuralError("constant functor target must have one cell per level");
  NFunctor f;
  f.map.resize(a.n + 1);
  for (int m = 0; m <= a.n; ++m) f.map[m].assign(a.cells(m), 0);
  return f;
}

}  // namespace hforge::cat
