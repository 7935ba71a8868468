#include "hforge/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hforge::cat {

std::vector<Id> FinCategory::hom(Id x, Id y) const {
  std::vector<Id> out;
  for (Id f = 0; f < num_morphisms(); ++f)
    if (src(f) == x && tgt(f) == y) out.push_back(f);
  return out;
}

bool FinCategory::is_iso(Id f) const {
  for (Id g : hom(tgt(f), src(f)))
    if (compose(g, f) == identity[src(f)] && compose(f, g) == identity[tgt(f)])
      return true;
  return false;
}

std::vector<Id> FinCategory::isos(Id x, Id y) const {
  std::vector<Id> out;
  for (Id f : hom(x, y))
    if (is_iso(f)) out.push_back(f);
  return out;
}

void check_wellformed(const FinCategory& c) {
  const Id m = c.num_morphisms();
  if (c.num_objects < 0) throw StructuralError("negative object count");
  if (static_cast<Id>(c.identity.size()) != c.num_objects)
    throw StructuralError("identity table size != object count");
  for (const auto& md : c.morphisms)
    if (md.src < 0 || md.src >= c.num_objects || md.tgt < 0 || md.tgt >= c.num_objects)
      throw StructuralError("morphism with dangling src/tgt object id");
  for (Id x = 0; x < c.num_objects; ++x) {
    if (c.identity[x] < 0 || c.identity[x] >= m)
      throw StructuralError("identity table entry out of range");
  }
  if (c.compose_table.size() != static_cast<std::size_t>(m) * m)
    throw StructuralError("compose table has wrong shape");
  for (Id v : c.compose_table)
    if (v != kNone && (v < 0 || v >= m))
      throw StructuralError("compose table entry out of range");
}

ValidationReport validate_category(const FinCategory& c) {
  check_wellformed(c);
  ValidationReport rep;
  const Id m = c.num_morphisms();

  for (Id x = 0; x < c.num_objects; ++x) {
    Id e = c.identity[x];
    if (c.src(e) != x || c.tgt(e) != x)
      rep.add("identity-endo", "identity of object is not an endomorphism", {x, e});
  }

  for (Id g = 0; g < m; ++g) {
    for (Id f = 0; f < m; ++f) {
      Id gf = c.compose(g, f);
      if (c.composable(g, f)) {
        if (gf == kNone) {
          rep.add("composition-total", "composable pair has no composite", {g, f});
        } else {
          if (c.src(gf) != c.src(f))
            rep.add("composite-src", "src(g∘f) != src(f)", {g, f, gf});
          if (c.tgt(gf) != c.tgt(g))
            rep.add("composite-tgt", "tgt(g∘f) != tgt(g)", {g, f, gf});
        }
      } else if (gf != kNone) {
        rep.add("composition-partial", "composite defined on non-composable pair", {g, f});
      }
    }
  }

  for (Id f = 0; f < m; ++f) {
    Id el = c.identity[c.tgt(f)];
    Id er = c.identity[c.src(f)];
    if (c.compose(el, f) != f)
      rep.add("unit-left", "id∘f != f", {el, f});
    if (c.compose(f, er) != f)
      rep.add("unit-right", "f∘id != f", {f, er});
  }

  for (Id h = 0; h < m; ++h)
    for (Id g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      for (Id f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        Id hg = c.compose(h, g), gf = c.compose(g, f);
        if (hg == kNone || gf == kNone) continue;  // reported above
        if (c.compose(hg, f) != c.compose(h, gf))
          rep.add("associativity", "(h∘g)∘f != h∘(g∘f)", {h, g, f});
      }
    }

  return rep;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory op = c;
  op.name = c.name.empty() ? "op" : c.name + "^op";
  for (auto& md : op.morphisms) std::swap(md.src, md.tgt);
  const Id m = c.num_morphisms();
  for (Id g = 0; g < m; ++g)
    for (Id f = 0; f < m; ++f)
      op.set_compose(g, f, c.compose(f, g));
  return op;
}

FinCategory poset_category(Id n, const std::vector<std::pair<Id, Id>>& relations,
                           const std::string& name) {
  // Reflexive-transitive closure of the given relation; at most one
  // morphism per ordered pair.
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (Id i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw StructuralError("poset relation out of range");
    le[a][b] = true;
  }
  for (Id k = 0; k < n; ++k)
    for (Id i = 0; i < n; ++i)
      for (Id j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i])
        throw StructuralError("relation is not antisymmetric");

  FinCategory c;
  c.name = name.empty() ? "poset" : name;
  c.num_objects = n;
  std::vector<std::vector<Id>> mid(n, std::vector<Id>(n, kNone));
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j)
      if (le[i][j]) {
        mid[i][j] = c.num_morphisms();
        c.morphisms.push_back({i, j});
      }
  c.identity.resize(n);
  for (Id i = 0; i < n; ++i) c.identity[i] = mid[i][i];
  const Id m = c.num_morphisms();
  c.compose_table.assign(static_cast<std::size_t>(m) * m, kNone);
  for (Id g = 0; g < m; ++g)
    for (Id f = 0; f < m; ++f)
      if (c.composable(g, f)) c.set_compose(g, f, mid[c.src(f)][c.tgt(g)]);
  return c;
}

FinCategory chain_poset(Id n) {
  std::vector<std::pair<Id, Id>> rel;
  for (Id i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
  return poset_category(n, rel, "chain" + std::to_string(n));
}

FinCategory discrete_category(Id n) {
  return poset_category(n, {}, "discrete" + std::to_string(n));
}

FinCategory monoid_category(const std::vector<std::vector<Id>>& mult, Id unit,
                            const std::string& name) {
  const Id k = static_cast<Id>(mult.size());
  FinCategory c;
  c.name = name.empty() ? "monoid" : name;
  c.num_objects = 1;
  for (Id i = 0; i < k; ++i) c.morphisms.push_back({0, 0});
  c.identity = {unit};
  c.compose_table.assign(static_cast<std::size_t>(k) * k, kNone);
  for (Id g = 0; g < k; ++g)
    for (Id f = 0; f < k; ++f) {
      if (static_cast<Id>(mult[g].size()) != k)
        throw StructuralError("monoid table not square");
      c.set_compose(g, f, mult[g][f]);
    }
  return c;
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  FinCategory c;
  c.name = a.name + "x" + b.name;
  c.num_objects = a.num_objects * b.num_objects;
  const Id mb = b.num_morphisms();
  auto obj = [&](Id x, Id y) { return x * b.num_objects + y; };
  auto mor = [&](Id f, Id g) { return f * mb + g; };
  for (Id f = 0; f < a.num_morphisms(); ++f)
    for (Id g = 0; g < mb; ++g)
      c.morphisms.push_back({obj(a.src(f), b.src(g)), obj(a.tgt(f), b.tgt(g))});
  c.identity.resize(c.num_objects);
  for (Id x = 0; x < a.num_objects; ++x)
    for (Id y = 0; y < b.num_objects; ++y)
      c.identity[obj(x, y)] = mor(a.identity[x], b.identity[y]);
  const Id m = c.num_morphisms();
  c.compose_table.assign(static_cast<std::size_t>(m) * m, kNone);
  for (Id f1 = 0; f1 < a.num_morphisms(); ++f1)
    for (Id g1 = 0; g1 < mb; ++g1)
      for (Id f2 = 0; f2 < a.num_morphisms(); ++f2)
        for (Id g2 = 0; g2 < mb; ++g2) {
          Id ff = a.composable(f1, f2) ? a.compose(f1, f2) : kNone;
          Id gg = b.composable(g1, g2) ? b.compose(g1, g2) : kNone;
          if (ff != kNone && gg != kNone)
            c.set_compose(mor(f1, g1), mor(f2, g2), mor(ff, gg));
        }
  return c;
}

FinCategory relabel(const FinCategory& c, const std::vector<Id>& obj_perm,
                    const std::vector<Id>& mor_perm) {
  FinCategory r;
  r.name = c.name + "~";
  r.num_objects = c.num_objects;
  r.morphisms.resize(c.morphisms.size());
  for (Id f = 0; f < c.num_morphisms(); ++f)
    r.morphisms[mor_perm[f]] = {obj_perm[c.src(f)], obj_perm[c.tgt(f)]};
  r.identity.resize(c.num_objects);
  for (Id x = 0; x < c.num_objects; ++x)
    r.identity[obj_perm[x]] = mor_perm[c.identity[x]];
  const Id m = c.num_morphisms();
  r.compose_table.assign(static_cast<std::size_t>(m) * m, kNone);
  for (Id g = 0; g < m; ++g)
    for (Id f = 0; f < m; ++f) {
      Id gf = c.compose(g, f);
      if (gf != kNone) r.set_compose(mor_perm[g], mor_perm[f], mor_perm[gf]);
    }
  return r;
}

ValidationReport validate_functor(const CatFunctor& f, const FinCategory& a,
                                  const FinCategory& b) {
  if (static_cast<Id>(f.obj.size()) != a.num_objects ||
      static_cast<Id>(f.mor.size()) != a.num_morphisms())
    throw StructuralError("functor table sizes mismatch source category");
  for (Id x : f.obj)
    if (x < 0 || x >= b.num_objects) throw StructuralError("functor maps to dangling object");
  for (Id g : f.mor)
    if (g < 0 || g >= b.num_morphisms()) throw StructuralError("functor maps to dangling morphism");

  ValidationReport rep;
  for (Id g = 0; g < a.num_morphisms(); ++g) {
    if (b.src(f.mor[g]) != f.obj[a.src(g)] || b.tgt(f.mor[g]) != f.obj[a.tgt(g)])
      rep.add("functor-src-tgt", "F breaks src/tgt", {g});
  }
  for (Id x = 0; x < a.num_objects; ++x)
    if (f.mor[a.identity[x]] != b.identity[f.obj[x]])
      rep.add("functor-id", "F(id) != id(F)", {x});
  for (Id g = 0; g < a.num_morphisms(); ++g)
    for (Id h = 0; h < a.num_morphisms(); ++h) {
      if (!a.composable(g, h)) continue;
      Id gh = a.compose(g, h);
      if (gh == kNone) continue;
      if (b.compose(f.mor[g], f.mor[h]) != f.mor[gh])
        rep.add("functor-comp", "F(g∘h) != F(g)∘F(h)", {g, h});
    }
  return rep;
}

CatFunctor identity_functor(const FinCategory& a) {
  CatFunctor f;
  f.obj.resize(a.num_objects);
  f.mor.resize(a.num_morphisms());
  for (Id x = 0; x < a.num_objects; ++x) f.obj[x] = x;
  for (Id g = 0; g < a.num_morphisms(); ++g) f.mor[g] = g;
  return f;
}

}  // namespace hforge::cat
