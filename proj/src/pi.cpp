#include "hforge/pi.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hforge::sset {

int HomotopyGroupResult::class_of_simplex(Id y) const {
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == y) return class_of[i];
  throw PreconditionError("simplex not in the homotopy carrier");
}

grp::FiniteGroupTable HomotopyGroupResult::as_table(const std::string& name) const {
  if (n == 0) throw PreconditionError("pi_0 carries no multiplication");
  grp::FiniteGroupTable t;
  t.name = name;
  t.order = num_classes;
  t.unit = identity_class;
  t.mult.resize(num_classes);
  for (int a = 0; a < num_classes; ++a) {
    t.mult[a].resize(num_classes);
    for (int b = 0; b < num_classes; ++b) t.mult[a][b] = mult[a][b];
  }
  return t;
}

std::vector<Id> pi_carrier(const PointedSSet& x, int n) {
  const TruncatedSSet& s = x.space;
  std::vector<Id> out;
  if (n == 0) {
    out.resize(s.size(0));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  Id base = s.degenerate_vertex(x.basepoint, n - 1);
  for (Id y = 0; y < s.size(n); ++y) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      if (s.d(n, i, y) != base) ok = false;
    if (ok) out.push_back(y);
  }
  return out;
}

std::vector<int> path_components(const TruncatedSSet& x) {
  std::vector<int> parent(x.size(0));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (x.truncation >= 1)
    for (Id e = 0; e < x.size(1); ++e) parent[find(x.d(1, 0, e))] = find(x.d(1, 1, e));
  std::vector<int> comp(x.size(0));
  std::map<int, int> remap;
  for (Id v = 0; v < x.size(0); ++v) {
    int r = find(v);
    auto it = remap.find(r);
    if (it == remap.end()) it = remap.emplace(r, static_cast<int>(remap.size())).first;
    comp[v] = it->second;
  }
  return comp;
}

bool pi_related(const PointedSSet& x, int n, Id y, Id z) {
  const TruncatedSSet& s = x.space;
  if (n == 0) {
    for (Id e = 0; e < s.size(1); ++e)
      if (s.d(1, 0, e) == y && s.d(1, 1, e) == z) return true;
    return false;
  }
  for (int i = 0; i <= n; ++i)
    if (s.d(n, i, y) != s.d(n, i, z)) return false;
  // witness w with δ_i w = σ_{n-1} δ_i y (i <= n-1), δ_n w = y, δ_{n+1} w = z
  for (Id w = 0; w < s.size(n + 1); ++w) {
    if (s.d(n + 1, n, w) != y || s.d(n + 1, n + 1, w) != z) continue;
    bool ok = true;
    for (int i = 0; i <= n - 1 && ok; ++i)
      if (s.d(n + 1, i, w) != s.s(n - 1, n - 1, s.d(n, i, y))) ok = false;
    if (ok) return true;
  }
  return false;
}

HomotopyGroupResult simplicial_pi(const PointedSSet& x, int n) {
  const TruncatedSSet& s = x.space;
  if (x.basepoint < 0 || x.basepoint >= s.size(0))
    throw StructuralError("basepoint id out of range");
  if (s.truncation < n + 2)
    throw PreconditionError("truncation " + std::to_string(s.truncation) +
                            " too small for pi_" + std::to_string(n));
  auto kan = is_kan(s, n + 1);
  if (!kan.kan())
    throw PreconditionError("space is not Kan up to level " + std::to_string(n + 1) + " (" +
                            std::to_string(kan.unfilled.size()) + " unfilled horns)");

  HomotopyGroupResult res;
  res.n = n;
  res.carrier = pi_carrier(x, n);
  const int sz = static_cast<int>(res.carrier.size());

  // raw relation must already be an equivalence relation on the carrier
  std::vector<std::vector<char>> rel(sz, std::vector<char>(sz, 0));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      rel[i][j] = pi_related(x, n, res.carrier[i], res.carrier[j]) ? 1 : 0;
  for (int i = 0; i < sz; ++i) {
    if (!rel[i][i]) throw InternalConsistencyError("homotopy relation not reflexive");
    for (int j = 0; j < sz; ++j) {
      if (rel[i][j] != rel[j][i])
        throw InternalConsistencyError("homotopy relation not symmetric");
      for (int k = 0; k < sz; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k])
          throw InternalConsistencyError("homotopy relation not transitive");
    }
  }

  res.class_of.assign(sz, -1);
  for (int i = 0; i < sz; ++i) {
    if (res.class_of[i] != -1) continue;
    int c = res.num_classes++;
    for (int j = 0; j < sz; ++j)
      if (rel[i][j]) res.class_of[j] = c;
  }

  Id base_simplex = s.degenerate_vertex(x.basepoint, n);
  res.identity_class = res.class_of_simplex(base_simplex);

  if (n == 0) return res;

  // multiplication via the (n+1)-filler; every filler and every pair of
  // representatives must give the same class
  Id bfill = s.degenerate_vertex(x.basepoint, n);
  res.mult.assign(res.num_classes, std::vector<int>(res.num_classes, -1));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      Id y = res.carrier[i], y2 = res.carrier[j];
      int found = -1;
      for (Id z = 0; z < s.size(n + 1); ++z) {
        if (s.d(n + 1, n - 1, z) != y || s.d(n + 1, n + 1, z) != y2) continue;
        bool ok = true;
        for (int t = 0; t <= n - 2 && ok; ++t)
          if (s.d(n + 1, t, z) != bfill) ok = false;
        if (!ok) continue;
        int cls = res.class_of_simplex(s.d(n + 1, n, z));
        if (found == -1)
          found = cls;
        else if (found != cls)
          throw InternalConsistencyError("product depends on the choice of filler");
      }
      if (found == -1)
        throw InternalConsistencyError("no multiplication filler despite Kan check");
      int ci = res.class_of[i], cj = res.class_of[j];
      if (res.mult[ci][cj] == -1)
        res.mult[ci][cj] = found;
      else if (res.mult[ci][cj] != found)
        throw InternalConsistencyError("product depends on representatives");
    }

  // group axioms
  for (int a = 0; a < res.num_classes; ++a) {
    if (res.mult[res.identity_class][a] != a || res.mult[a][res.identity_class] != a)
      throw InternalConsistencyError("identity class fails unit law");
    for (int b = 0; b < res.num_classes; ++b)
      for (int c = 0; c < res.num_classes; ++c)
        if (res.mult[res.mult[a][b]][c] != res.mult[a][res.mult[b][c]])
          throw InternalConsistencyError("homotopy multiplication not associative");
  }
  res.inverse.assign(res.num_classes, -1);
  for (int a = 0; a < res.num_classes; ++a) {
    for (int b = 0; b < res.num_classes; ++b)
      if (res.mult[a][b] == res.identity_class && res.mult[b][a] == res.identity_class)
        res.inverse[a] = b;
    if (res.inverse[a] == -1)
      throw InternalConsistencyError("homotopy class without inverse");
  }
  if (n >= 2)
    for (int a = 0; a < res.num_classes; ++a)
      for (int b = 0; b < res.num_classes; ++b)
        if (res.mult[a][b] != res.mult[b][a])
          throw InternalConsistencyError("pi_n not abelian for n >= 2");
  return res;
}

InducedHom pi_of_map(const SimplicialMap& f, const PointedSSet& x, const PointedSSet& y,
                     int n, const HomotopyGroupResult& pix, const HomotopyGroupResult& piy) {
  if (f.level[0][x.basepoint] != y.basepoint)
    throw PreconditionError("map is not pointed");
  InducedHom out;
  out.on_classes.assign(pix.num_classes, -1);
  for (std::size_t i = 0; i < pix.carrier.size(); ++i) {
    Id img = f.level[n][pix.carrier[i]];
    int cls = piy.class_of_simplex(img);
    int& slot = out.on_classes[pix.class_of[i]];
    if (slot == -1)
      slot = cls;
    else if (slot != cls)
      throw InternalConsistencyError("induced map not constant on classes");
  }
  out.is_homomorphism = true;
  if (n >= 1) {
    for (int a = 0; a < pix.num_classes && out.is_homomorphism; ++a)
      for (int b = 0; b < pix.num_classes && out.is_homomorphism; ++b)
        if (out.on_classes[pix.mult[a][b]] !=
            piy.mult[out.on_classes[a]][out.on_classes[b]])
          out.is_homomorphism = false;
  } else {
    out.is_homomorphism = out.on_classes[pix.identity_class] == piy.identity_class;
  }
  // bijective on classes?
  std::vector<char> hit(piy.num_classes, 0);
  bool inj = true;
  for (int c : out.on_classes) {
    if (hit[c]) inj = false;
    hit[c] = 1;
  }
  bool surj = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  out.is_isomorphism = out.is_homomorphism && inj && surj;
  return out;
}

Pi1Presentation fundamental_group_presentation(const PointedSSet& x, int tietze_budget) {
  const TruncatedSSet& s = x.space;
  if (s.truncation < 2)
    throw PreconditionError("fundamental group needs truncation >= 2");
  Pi1Presentation pres;
  auto comps = path_components(s);
  int my_comp = comps[x.basepoint];
  pres.in_component.assign(s.size(0), 0);
  for (Id v = 0; v < s.size(0); ++v) pres.in_component[v] = comps[v] == my_comp;
  pres.ignored_other_components =
      std::any_of(comps.begin(), comps.end(), [&](int c) { return c != my_comp; });

  // spanning tree over nondegenerate edges, BFS from the basepoint
  pres.tree_parent_edge.assign(s.size(0), kNone);
  std::vector<char> visited(s.size(0), 0);
  std::vector<char> edge_in_tree(s.size(1), 0);
  visited[x.basepoint] = 1;
  std::deque<Id> queue = {x.basepoint};
  while (!queue.empty()) {
    Id v = queue.front();
    queue.pop_front();
    for (Id e = 0; e < s.size(1); ++e) {
      if (s.is_degenerate(1, e)) continue;
      Id a = s.d(1, 1, e), b = s.d(1, 0, e);  // edge a -> b
      Id other = kNone;
      if (a == v && !visited[b]) other = b;
      if (b == v && !visited[a]) other = a;
      if (other == kNone) continue;
      visited[other] = 1;
      pres.tree_parent_edge[other] = e;
      edge_in_tree[e] = 1;
      queue.push_back(other);
    }
  }

  // generators: nondegenerate edges within the component
  std::map<Id, int> gen_of_edge;
  for (Id e = 0; e < s.size(1); ++e) {
    if (s.is_degenerate(1, e)) continue;
    if (!pres.in_component[s.d(1, 1, e)]) continue;
    gen_of_edge[e] = static_cast<int>(pres.generator_edges.size());
    pres.generator_edges.push_back(e);
  }
  pres.raw.generators = static_cast<int>(pres.generator_edges.size());
  for (int g = 0; g < pres.raw.generators; ++g)
    pres.raw.generator_names.push_back("e" + std::to_string(pres.generator_edges[g]));

  auto letter = [&](Id e, grp::Word& w, bool invert) {
    if (s.is_degenerate(1, e)) return;
    auto it = gen_of_edge.find(e);
    if (it == gen_of_edge.end()) return;
    w.push_back(invert ? -it->second - 1 : it->second);
  };

  for (Id e : pres.generator_edges)
    if (edge_in_tree[e]) pres.raw.relators.push_back({gen_of_edge[e]});

  // 2-simplex relations: edge(δ_1 t) = edge(δ_0 t) ∘ edge(δ_2 t)
  for (Id t = 0; t < s.size(2); ++t) {
    Id e0 = s.d(2, 0, t), e1 = s.d(2, 1, t), e2 = s.d(2, 2, t);
    if (!pres.in_component[s.d(1, 1, e2)]) continue;
    grp::Word w;
    letter(e0, w, false);
    letter(e2, w, false);
    letter(e1, w, true);
    w = grp::word_free_reduce(w);
    if (!w.empty()) pres.raw.relators.push_back(w);
  }

  pres.simplified = grp::tietze_simplify(pres.raw, tietze_budget);
  pres.abelian_invariants = pres.raw.abelian_invariant_factors();
  return pres;
}

grp::Word pi1_word_for_path(const Pi1Presentation& pres, const TruncatedSSet& x,
                            const std::vector<std::pair<Id, bool>>& path) {
  std::map<Id, int> gen_of_edge;
  for (std::size_t g = 0; g < pres.generator_edges.size(); ++g)
    gen_of_edge[pres.generator_edges[g]] = static_cast<int>(g);
  grp::Word w;
  // last step first under the composition order convention
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto [edge, forward] = *it;
    if (x.is_degenerate(1, edge)) continue;
    auto g = gen_of_edge.find(edge);
    if (g == gen_of_edge.end())
      throw PreconditionError("path leaves the basepoint component");
    w.push_back(forward ? g->second : -g->second - 1);
  }
  return grp::word_free_reduce(w);
}

std::vector<std::pair<Id, bool>> pi1_canonical_loop(const Pi1Presentation& pres,
                                                    const TruncatedSSet& x, Id edge,
                                                    Id basepoint) {
  auto up_path = [&](Id v) {
    // steps walking v -> root along tree edges
    std::vector<std::pair<Id, bool>> steps;
    while (v != basepoint) {
      Id pe = pres.tree_parent_edge[v];
      if (pe == kNone) throw PreconditionError("vertex outside the spanning tree");
      Id s = x.d(1, 1, pe), t = x.d(1, 0, pe);
      // walking toward the root: forward if the edge points v -> parent
      if (s == v) {
        steps.push_back({pe, true});
        v = t;
      } else {
        steps.push_back({pe, false});
        v = s;
      }
    }
    return steps;
  };
  std::vector<std::pair<Id, bool>> loop;
  auto down = up_path(x.d(1, 1, edge));  // root -> src(edge), reversed below
  for (auto it = down.rbegin(); it != down.rend(); ++it)
    loop.push_back({it->first, !it->second});
  loop.push_back({edge, true});
  for (auto [e, fwd] : up_path(x.d(1, 0, edge))) loop.push_back({e, fwd});
  return loop;
}

}  // namespace hforge::sset
