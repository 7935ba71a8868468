#include "hforge/diagram.hpp"

#include <algorithm>

namespace hforge::cat {

void check_diagram(const FinCategory& c, const Diagram& d) {
  check_wellformed(d.shape);
  if (static_cast<Id>(d.object_label.size()) != d.shape.num_objects)
    throw StructuralError("diagram object labeling has wrong size");
  if (static_cast<Id>(d.morphism_label.size()) != d.shape.num_morphisms())
    throw StructuralError("diagram morphism labeling has wrong size");
  for (Id x : d.object_label)
    if (x < 0 || x >= c.num_objects) throw StructuralError("diagram labels dangling object");
  for (Id u = 0; u < d.shape.num_morphisms(); ++u) {
    Id fu = d.morphism_label[u];
    if (fu < 0 || fu >= c.num_morphisms())
      throw StructuralError("diagram labels dangling morphism");
    if (c.src(fu) != d.object_label[d.shape.src(u)] ||
        c.tgt(fu) != d.object_label[d.shape.tgt(u)])
      throw StructuralError("diagram labeling breaks src/tgt");
  }
  for (Id x = 0; x < d.shape.num_objects; ++x)
    if (d.morphism_label[d.shape.identity[x]] != c.identity[d.object_label[x]])
      throw StructuralError("diagram labeling breaks identities");
  for (Id v = 0; v < d.shape.num_morphisms(); ++v)
    for (Id u = 0; u < d.shape.num_morphisms(); ++u) {
      if (!d.shape.composable(v, u)) continue;
      Id vu = d.shape.compose(v, u);
      if (c.compose(d.morphism_label[v], d.morphism_label[u]) != d.morphism_label[vu])
        throw StructuralError("diagram labeling breaks composition");
    }
}

static bool cone_commutes(const FinCategory& c, const Diagram& d, const Cone& cone) {
  for (Id x = 0; x < d.shape.num_objects; ++x) {
    Id leg = cone.legs[x];
    if (c.src(leg) != cone.apex || c.tgt(leg) != d.object_label[x]) return false;
  }
  for (Id u = 0; u < d.shape.num_morphisms(); ++u) {
    Id fu = d.morphism_label[u];
    if (c.compose(fu, cone.legs[d.shape.src(u)]) != cone.legs[d.shape.tgt(u)])
      return false;
  }
  return true;
}

std::vector<Cone> all_limit_cones(const FinCategory& c, const Diagram& d) {
  std::vector<Cone> cones;
  const Id k = d.shape.num_objects;
  for (Id apex = 0; apex < c.num_objects; ++apex) {
    // Backtracking over leg choices with incremental commutativity checks.
    std::vector<std::vector<Id>> candidates(k);
    for (Id x = 0; x < k; ++x) candidates[x] = c.hom(apex, d.object_label[x]);
    Cone cone;
    cone.apex = apex;
    cone.legs.assign(k, kNone);
    auto consistent = [&](Id x) {
      for (Id u = 0; u < d.shape.num_morphisms(); ++u) {
        Id sx = d.shape.src(u), tx = d.shape.tgt(u);
        if (cone.legs[sx] == kNone || cone.legs[tx] == kNone) continue;
        if (sx != x && tx != x) continue;
        if (c.compose(d.morphism_label[u], cone.legs[sx]) != cone.legs[tx]) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, Id x) -> void {
      if (x == k) {
        cones.push_back(cone);
        return;
      }
      for (Id leg : candidates[x]) {
        cone.legs[x] = leg;
        if (consistent(x)) self(self, x + 1);
      }
      cone.legs[x] = kNone;
    };
    if (k == 0) {
      cones.push_back(cone);
    } else {
      rec(rec, 0);
    }
  }
  return cones;
}

static int count_mediators(const FinCategory& c, const Diagram& d, const Cone& from,
                           const Cone& into) {
  int n = 0;
  for (Id h : c.hom(from.apex, into.apex)) {
    bool ok = true;
    for (Id x = 0; x < d.shape.num_objects && ok; ++x)
      if (c.compose(into.legs[x], h) != from.legs[x]) ok = false;
    // Empty diagram: any h mediates.
    if (ok) ++n;
  }
  return n;
}

bool is_limiting_cone(const FinCategory& c, const Diagram& d, const Cone& cone) {
  if (!cone_commutes(c, d, cone)) return false;
  for (const Cone& other : all_limit_cones(c, d))
    if (count_mediators(c, d, other, cone) != 1) return false;
  return true;
}

LimitResult finite_limit(const FinCategory& c, const Diagram& d) {
  check_diagram(c, d);
  auto cones = all_limit_cones(c, d);
  if (cones.empty()) {
    NoLimit nl;
    nl.no_cones = true;
    return nl;
  }
  for (const Cone& cand : cones) {
    bool universal = true;
    NoLimit nl;
    for (const Cone& other : cones) {
      int n = count_mediators(c, d, other, cand);
      if (n != 1) {
        universal = false;
        nl.candidate = cand;
        nl.problem_cone = other;
        nl.mediator_count = n;
        break;
      }
    }
    if (universal) return cand;
  }
  // None universal; witness with the first candidate's failure.
  NoLimit nl;
  for (const Cone& other : cones) {
    int n = count_mediators(c, d, other, cones[0]);
    if (n != 1) {
      nl.candidate = cones[0];
      nl.problem_cone = other;
      nl.mediator_count = n;
      break;
    }
  }
  return nl;
}

LimitResult finite_colimit(const FinCategory& c, const Diagram& d) {
  check_diagram(c, d);
  FinCategory cop = opposite(c);
  Diagram dop{opposite(d.shape), d.object_label, d.morphism_label};
  return finite_limit(cop, dop);
}

bool is_colimiting_cone(const FinCategory& c, const Diagram& d, const Cone& cone) {
  FinCategory cop = opposite(c);
  Diagram dop{opposite(d.shape), d.object_label, d.morphism_label};
  return is_limiting_cone(cop, dop, cone);
}

std::optional<Id> terminal_object(const FinCategory& c) {
  Diagram empty{shape_empty(), {}, {}};
  auto r = finite_limit(c, empty);
  if (auto* cone = std::get_if<Cone>(&r)) return cone->apex;
  return std::nullopt;
}

std::optional<Id> initial_object(const FinCategory& c) {
  Diagram empty{shape_empty(), {}, {}};
  auto r = finite_colimit(c, empty);
  if (auto* cone = std::get_if<Cone>(&r)) return cone->apex;
  return std::nullopt;
}

FinCategory shape_empty() {
  FinCategory s;
  s.name = "empty";
  return s;
}

FinCategory shape_cospan() {
  return poset_category(3, {{0, 2}, {1, 2}}, "cospan");
}

FinCategory shape_span() {
  return poset_category(3, {{2, 0}, {2, 1}}, "span");
}

FinCategory shape_parallel_pair() {
  FinCategory s;
  s.name = "parallel";
  s.num_objects = 2;
  s.morphisms = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
  s.identity = {0, 1};
  const Id m = 4;
  s.compose_table.assign(m * m, kNone);
  s.set_compose(0, 0, 0);
  s.set_compose(1, 1, 1);
  s.set_compose(2, 0, 2);
  s.set_compose(3, 0, 3);
  s.set_compose(1, 2, 2);
  s.set_compose(1, 3, 3);
  return s;
}

std::vector<Diagram> all_diagrams(const FinCategory& c, const FinCategory& shape) {
  std::vector<Diagram> out;
  const Id k = shape.num_objects;
  std::vector<Id> olab(k, 0);
  auto emit_morphism_labelings = [&]() {
    const Id sm = shape.num_morphisms();
    Diagram d{shape, olab, std::vector<Id>(sm, kNone)};
    auto rec = [&](auto&& self, Id u) -> void {
      if (u == sm) {
        // Functoriality beyond src/tgt (identities, composites).
        try {
          check_diagram(c, d);
          out.push_back(d);
        } catch (const StructuralError&) {
        }
        return;
      }
      for (Id f : c.hom(olab[shape.src(u)], olab[shape.tgt(u)])) {
        d.morphism_label[u] = f;
        self(self, u + 1);
      }
      d.morphism_label[u] = kNone;
    };
    rec(rec, 0);
  };
  auto rec_obj = [&](auto&& self, Id x) -> void {
    if (x == k) {
      emit_morphism_labelings();
      return;
    }
    for (Id o = 0; o < c.num_objects; ++o) {
      olab[x] = o;
      self(self, x + 1);
    }
  };
  if (k == 0) {
    out.push_back({shape, {}, {}});
  } else {
    rec_obj(rec_obj, 0);
  }
  return out;
}

LimitResult pullback(const FinCategory& c, Id f, Id g) {
  if (c.tgt(f) != c.tgt(g)) throw StructuralError("pullback of non-cospan");
  FinCategory sh = shape_cospan();
  Diagram d;
  d.shape = sh;
  d.object_label = {c.src(f), c.src(g), c.tgt(f)};
  d.morphism_label.assign(sh.num_morphisms(), kNone);
  for (Id u = 0; u < sh.num_morphisms(); ++u) {
    Id sx = sh.src(u), tx = sh.tgt(u);
    if (sx == tx)
      d.morphism_label[u] = c.identity[d.object_label[sx]];
    else if (sx == 0)
      d.morphism_label[u] = f;
    else
      d.morphism_label[u] = g;
  }
  return finite_limit(c, d);
}

LimitResult pushout(const FinCategory& c, Id f, Id g) {
  if (c.src(f) != c.src(g)) throw StructuralError("pushout of non-span");
  FinCategory sh = shape_span();
  Diagram d;
  d.shape = sh;
  d.object_label = {c.tgt(f), c.tgt(g), c.src(f)};
  d.morphism_label.assign(sh.num_morphisms(), kNone);
  for (Id u = 0; u < sh.num_morphisms(); ++u) {
    Id sx = sh.src(u), tx = sh.tgt(u);
    if (sx == tx)
      d.morphism_label[u] = c.identity[d.object_label[sx]];
    else if (tx == 0)
      d.morphism_label[u] = f;
    else
      d.morphism_label[u] = g;
  }
  return finite_colimit(c, d);
}

}  // namespace hforge::cat
