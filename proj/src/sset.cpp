#include "hforge/sset.hpp"

#include <algorithm>
#include <numeric>

namespace hforge::sset {

Id TruncatedSSet::degenerate_vertex(Id v, int level) const {
  Id cur = v;
  for (int n = 0; n < level; ++n) cur = degen[n][n][cur];
  return cur;
}

bool TruncatedSSet::is_degenerate(int n, Id x) const {
  if (n == 0) return false;
  for (int i = 0; i < n; ++i) {
    if (degen[n - 1][i][face[n][i][x]] == x) return true;
    if (degen[n - 1][i][face[n][i + 1][x]] == x) return true;
  }
  return false;
}

void check_wellformed(const TruncatedSSet& x) {
  if (x.truncation < 0) throw StructuralError("negative truncation");
  if (static_cast<int>(x.level_size.size()) != x.truncation + 1)
    throw StructuralError("level_size count != N+1");
  if (static_cast<int>(x.face.size()) != x.truncation + 1 ||
      static_cast<int>(x.degen.size()) != std::max(x.truncation, 0))
    throw StructuralError("face/degeneracy table count mismatch");
  for (int n = 1; n <= x.truncation; ++n) {
    if (static_cast<int>(x.face[n].size()) != n + 1)
      throw StructuralError("face table at level " + std::to_string(n) + " needs n+1 rows");
    for (const auto& row : x.face[n]) {
      if (static_cast<Id>(row.size()) != x.size(n))
        throw StructuralError("face row size mismatch");
      for (Id v : row)
        if (v < 0 || v >= x.size(n - 1)) throw StructuralError("dangling face id");
    }
  }
  for (int n = 0; n < x.truncation; ++n) {
    if (static_cast<int>(x.degen[n].size()) != n + 1)
      throw StructuralError("degeneracy table at level " + std::to_string(n) +
                            " needs n+1 rows");
    for (const auto& row : x.degen[n]) {
      if (static_cast<Id>(row.size()) != x.size(n))
        throw StructuralError("degeneracy row size mismatch");
      for (Id v : row)
        if (v < 0 || v >= x.size(n + 1)) throw StructuralError("dangling degeneracy id");
    }
  }
}

ValidationReport validate_sset(const TruncatedSSet& x) {
  check_wellformed(x);
  ValidationReport rep;
  // δ_i δ_j = δ_{j-1} δ_i for i < j
  for (int n = 2; n <= x.truncation; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (Id c = 0; c < x.size(n); ++c)
          if (x.d(n - 1, i, x.d(n, j, c)) != x.d(n - 1, j - 1, x.d(n, i, c)))
            rep.add("face-face",
                    "δδ identity fails at level " + std::to_string(n), {i, j, c});
  // σ_i σ_j = σ_{j+1} σ_i for i <= j
  for (int n = 0; n + 2 <= x.truncation; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (Id c = 0; c < x.size(n); ++c)
          if (x.s(n + 1, i, x.s(n, j, c)) != x.s(n + 1, j + 1, x.s(n, i, c)))
            rep.add("degen-degen", "σσ identity fails at level " + std::to_string(n),
                    {i, j, c});
  // δ_i σ_j cases
  for (int n = 0; n < x.truncation; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (Id c = 0; c < x.size(n); ++c) {
          Id lhs = x.d(n + 1, i, x.s(n, j, c));
          Id rhs;
          if (i == j || i == j + 1)
            rhs = c;
          else if (i < j)
            rhs = x.s(n - 1, j - 1, x.d(n, i, c));
          else
            rhs = x.s(n - 1, j, x.d(n, i - 1, c));
          if (lhs != rhs)
            rep.add("face-degen", "δσ identity fails at level " + std::to_string(n),
                    {i, j, c});
        }
  return rep;
}

ValidationReport validate_simplicial_map(const SimplicialMap& f, const TruncatedSSet& x,
                                         const TruncatedSSet& y) {
  int levels = std::min(x.truncation, y.truncation);
  if (static_cast<int>(f.level.size()) < static_cast<std::size_t>(levels + 1))
    throw StructuralError("simplicial map is missing levels");
  for (int n = 0; n <= levels; ++n) {
    if (static_cast<Id>(f.level[n].size()) != x.size(n))
      throw StructuralError("simplicial map level size mismatch");
    for (Id v : f.level[n])
      if (v < 0 || v >= y.size(n)) throw StructuralError("simplicial map dangling id");
  }
  ValidationReport rep;
  for (int n = 1; n <= levels; ++n)
    for (int i = 0; i <= n; ++i)
      for (Id c = 0; c < x.size(n); ++c)
        if (f.level[n - 1][x.d(n, i, c)] != y.face[n][i][f.level[n][c]])
          rep.add("map-face", "map does not commute with δ", {n, i, c});
  for (int n = 0; n < levels; ++n)
    for (int i = 0; i <= n; ++i)
      for (Id c = 0; c < x.size(n); ++c)
        if (f.level[n + 1][x.s(n, i, c)] != y.degen[n][i][f.level[n][c]])
          rep.add("map-degen", "map does not commute with σ", {n, i, c});
  return rep;
}

TruncatedSSet terminal_sset(int truncation) {
  TruncatedSSet x;
  x.name = "terminal";
  x.truncation = truncation;
  x.level_size.assign(truncation + 1, 1);
  x.face.resize(truncation + 1);
  x.degen.resize(std::max(truncation, 0));
  for (int n = 1; n <= truncation; ++n) x.face[n].assign(n + 1, {0});
  for (int n = 0; n < truncation; ++n) x.degen[n].assign(n + 1, {0});
  return x;
}

TruncatedSSet discrete_sset(int truncation, Id points) {
  TruncatedSSet x;
  x.name = "discrete" + std::to_string(points);
  x.truncation = truncation;
  x.level_size.assign(truncation + 1, points);
  x.face.resize(truncation + 1);
  x.degen.resize(std::max(truncation, 0));
  std::vector<Id> idrow(points);
  std::iota(idrow.begin(), idrow.end(), 0);
  for (int n = 1; n <= truncation; ++n) x.face[n].assign(n + 1, idrow);
  for (int n = 0; n < truncation; ++n) x.degen[n].assign(n + 1, idrow);
  return x;
}

namespace {

// Composable chains of length n, lexicographically ordered; level 0 chains
// are single objects.
void enumerate_chains(const cat::FinCategory& c, int n,
                      std::vector<std::vector<Id>>& out) {
  out.clear();
  if (n == 0) {
    for (Id o = 0; o < c.num_objects; ++o) out.push_back({o});
    return;
  }
  std::vector<Id> cur;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (Id f = 0; f < c.num_morphisms(); ++f) {
      if (k > 0 && c.src(f) != c.tgt(cur.back())) continue;
      cur.push_back(f);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TruncatedSSet nerve(const FinCategory& c, int truncation) {
  cat::check_wellformed(c);
  TruncatedSSet x;
  x.name = "N(" + c.name + ")";
  x.truncation = truncation;
  x.face.resize(truncation + 1);
  x.degen.resize(std::max(truncation, 0));

  std::vector<std::vector<std::vector<Id>>> chains(truncation + 1);
  std::vector<std::map<std::vector<Id>, Id>> index(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    enumerate_chains(c, n, chains[n]);
    for (Id i = 0; i < static_cast<Id>(chains[n].size()); ++i) index[n][chains[n][i]] = i;
    x.level_size.push_back(static_cast<Id>(chains[n].size()));
  }

  for (int n = 1; n <= truncation; ++n) {
    x.face[n].assign(n + 1, std::vector<Id>(x.size(n)));
    for (Id s = 0; s < x.size(n); ++s) {
      const auto& ch = chains[n][s];
      for (int i = 0; i <= n; ++i) {
        std::vector<Id> fc;
        if (n == 1) {
          fc = {i == 0 ? c.tgt(ch[0]) : c.src(ch[0])};
        } else if (i == 0) {
          fc.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          fc.assign(ch.begin(), ch.end() - 1);
        } else {
          fc.assign(ch.begin(), ch.begin() + i);
          fc.back() = c.compose(ch[i], ch[i - 1]);
          fc.insert(fc.end(), ch.begin() + i + 1, ch.end());
        }
        x.face[n][i][s] = index[n - 1].at(fc);
      }
    }
  }
  for (int n = 0; n < truncation; ++n) {
    x.degen[n].assign(n + 1, std::vector<Id>(x.size(n)));
    for (Id s = 0; s < x.size(n); ++s) {
      const auto& ch = chains[n][s];
      for (int i = 0; i <= n; ++i) {
        std::vector<Id> dc;
        if (n == 0) {
          dc = {c.identity[ch[0]]};
        } else {
          Id vertex = (i == 0) ? c.src(ch[0]) : c.tgt(ch[i - 1]);
          dc.assign(ch.begin(), ch.begin() + i);
          dc.push_back(c.identity[vertex]);
          dc.insert(dc.end(), ch.begin() + i, ch.end());
        }
        x.degen[n][i][s] = index[n + 1].at(dc);
      }
    }
  }
  return x;
}

std::vector<Id> nerve_chain(const FinCategory& c, int, int n, Id simplex) {
  std::vector<std::vector<Id>> chains;
  enumerate_chains(c, n, chains);
  return chains[simplex];
}

Id nerve_simplex_of_chain(const FinCategory& c, int, const std::vector<Id>& chain) {
  std::vector<std::vector<Id>> chains;
  enumerate_chains(c, static_cast<int>(chain.size()), chains);
  auto it = std::lower_bound(chains.begin(), chains.end(), chain);
  if (it == chains.end() || *it != chain)
    throw StructuralError("chain is not composable in the nerve");
  return static_cast<Id>(it - chains.begin());
}

TruncatedSSet product(const TruncatedSSet& a, const TruncatedSSet& b) {
  int truncation = std::min(a.truncation, b.truncation);
  TruncatedSSet x;
  x.name = a.name + "x" + b.name;
  x.truncation = truncation;
  x.face.resize(truncation + 1);
  x.degen.resize(std::max(truncation, 0));
  for (int n = 0; n <= truncation; ++n) x.level_size.push_back(a.size(n) * b.size(n));
  auto pack = [&](int n, Id u, Id v) { return u * b.size(n) + v; };
  for (int n = 1; n <= truncation; ++n) {
    x.face[n].assign(n + 1, std::vector<Id>(x.size(n)));
    for (Id u = 0; u < a.size(n); ++u)
      for (Id v = 0; v < b.size(n); ++v)
        for (int i = 0; i <= n; ++i)
          x.face[n][i][pack(n, u, v)] = pack(n - 1, a.d(n, i, u), b.d(n, i, v));
  }
  for (int n = 0; n < truncation; ++n) {
    x.degen[n].assign(n + 1, std::vector<Id>(x.size(n)));
    for (Id u = 0; u < a.size(n); ++u)
      for (Id v = 0; v < b.size(n); ++v)
        for (int i = 0; i <= n; ++i)
          x.degen[n][i][pack(n, u, v)] = pack(n + 1, a.s(n, i, u), b.s(n, i, v));
  }
  return x;
}

SimplicialMap projection_first(const TruncatedSSet& a, const TruncatedSSet& b) {
  int truncation = std::min(a.truncation, b.truncation);
  SimplicialMap f;
  f.level.resize(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    f.level[n].resize(a.size(n) * b.size(n));
    for (Id u = 0; u < a.size(n); ++u)
      for (Id v = 0; v < b.size(n); ++v) f.level[n][u * b.size(n) + v] = u;
  }
  return f;
}

SimplicialMap projection_second(const TruncatedSSet& a, const TruncatedSSet& b) {
  int truncation = std::min(a.truncation, b.truncation);
  SimplicialMap f;
  f.level.resize(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    f.level[n].resize(a.size(n) * b.size(n));
    for (Id u = 0; u < a.size(n); ++u)
      for (Id v = 0; v < b.size(n); ++v) f.level[n][u * b.size(n) + v] = v;
  }
  return f;
}

SimplicialMap include_first(const TruncatedSSet& a, const TruncatedSSet& b, Id y_base) {
  int truncation = std::min(a.truncation, b.truncation);
  SimplicialMap f;
  f.level.resize(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    Id bb = b.degenerate_vertex(y_base, n);
    f.level[n].resize(a.size(n));
    for (Id u = 0; u < a.size(n); ++u) f.level[n][u] = u * b.size(n) + bb;
  }
  return f;
}

TruncatedSSet truncate(const TruncatedSSet& x, int level) {
  if (level > x.truncation) throw PreconditionError("cannot truncate upward");
  TruncatedSSet y;
  y.name = x.name;
  y.truncation = level;
  y.level_size.assign(x.level_size.begin(), x.level_size.begin() + level + 1);
  y.face.assign(x.face.begin(), x.face.begin() + level + 1);
  y.degen.assign(x.degen.begin(), x.degen.begin() + level);
  return y;
}

SimplicialMap identity_map(const TruncatedSSet& x) {
  SimplicialMap f;
  f.level.resize(x.truncation + 1);
  for (int n = 0; n <= x.truncation; ++n) {
    f.level[n].resize(x.size(n));
    std::iota(f.level[n].begin(), f.level[n].end(), 0);
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h;
  std::size_t levels = std::min(g.level.size(), f.level.size());
  h.level.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    h.level[n].resize(f.level[n].size());
    for (std::size_t i = 0; i < f.level[n].size(); ++i)
      h.level[n][i] = g.level[n][f.level[n][i]];
  }
  return h;
}

Id apply_monotone(const TruncatedSSet& x, const std::vector<int>& phi, int n, Id simplex) {
  const int k = static_cast<int>(phi.size()) - 1;
  for (int i = 0; i + 1 <= k; ++i)
    if (phi[i] > phi[i + 1]) throw StructuralError("apply_monotone: map is not monotone");
  for (int v : phi)
    if (v < 0 || v > n) throw StructuralError("apply_monotone: value out of range");

  // injective part: delete the missed indices of [n], largest first
  std::vector<char> hit(n + 1, 0);
  for (int v : phi) hit[v] = 1;
  Id cur = simplex;
  int level = n;
  for (int j = n; j >= 0; --j)
    if (!hit[j]) {
      cur = x.d(level, j, cur);
      --level;
    }
  // surjective part [k] ->> image ranks
  std::vector<int> rank(n + 1, -1);
  int r = 0;
  for (int v = 0; v <= n; ++v)
    if (hit[v]) rank[v] = r++;
  std::vector<int> u(k + 1);
  for (int i = 0; i <= k; ++i) u[i] = rank[phi[i]];
  // X(u' ∘ s^i) = σ_i ∘ X(u')
  auto rec = [&](auto&& self, const std::vector<int>& w) -> Id {
    bool idmap = true;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != static_cast<int>(i)) idmap = false;
    if (idmap) return cur;
    int i = 0;
    while (w[i] != w[i + 1]) ++i;
    std::vector<int> w2;
    for (std::size_t t = 0; t < w.size(); ++t)
      if (t != static_cast<std::size_t>(i) + 1) w2.push_back(w[t]);
    Id y = self(self, w2);
    return x.s(static_cast<int>(w.size()) - 2, i, y);
  };
  return rec(rec, u);
}

SSetBuilder::SSetBuilder(int truncation) {
  x_.truncation = truncation;
  x_.level_size.assign(truncation + 1, 0);
  x_.face.resize(truncation + 1);
  x_.degen.resize(std::max(truncation, 0));
  for (int n = 1; n <= truncation; ++n) x_.face[n].assign(n + 1, {});
  for (int n = 0; n < truncation; ++n) x_.degen[n].assign(n + 1, {});
  normal_.resize(truncation + 1);
  normal_index_.resize(truncation + 1);
  nd_faces_.resize(truncation + 1);
  nd_ids_.resize(truncation + 1);
}

Id SSetBuilder::add_vertex() {
  if (filled_ > 0) throw StructuralError("vertices must be added before higher levels");
  Normal nf{0, x_.level_size[0], {0}};
  Id id = x_.level_size[0]++;
  normal_[0].push_back(nf);
  normal_index_[0][nf] = id;
  nd_ids_[0].push_back(id);
  nd_faces_[0].push_back({});
  return id;
}

void SSetBuilder::ensure_level(int n) {
  while (filled_ < n && filled_ < x_.truncation) {
    int lv = filled_;
    // degeneracies from lv up to lv+1, interned by normal form
    for (int i = 0; i <= lv; ++i) x_.degen[lv][i].assign(x_.size(lv), kNone);
    for (Id y = 0; y < x_.size(lv); ++y)
      for (int i = 0; i <= lv; ++i) {
        Normal nf = normal_[lv][y];
        std::vector<int> surj(lv + 2);
        for (int t = 0; t <= lv + 1; ++t) surj[t] = normal_[lv][y].surj[t <= i ? t : t - 1];
        nf.surj = surj;
        auto it = normal_index_[lv + 1].find(nf);
        Id id;
        if (it != normal_index_[lv + 1].end()) {
          id = it->second;
        } else {
          id = x_.level_size[lv + 1]++;
          normal_[lv + 1].push_back(nf);
          normal_index_[lv + 1][nf] = id;
          for (int fi = 0; fi <= lv + 1; ++fi) x_.face[lv + 1][fi].push_back(kNone);
        }
        x_.degen[lv][i][y] = id;
      }
    // faces of the new degenerate simplices via the δσ identities
    for (Id z = 0; z < x_.size(lv + 1); ++z) {
      if (x_.face[lv + 1][0][z] != kNone) continue;
      bool found = false;
      for (int j = 0; j <= lv && !found; ++j)
        for (Id y = 0; y < x_.size(lv) && !found; ++y)
          if (x_.degen[lv][j][y] == z) {
            found = true;
            for (int i = 0; i <= lv + 1; ++i) {
              Id value;
              if (i == j || i == j + 1)
                value = y;
              else if (i < j)
                value = x_.s(lv - 1, j - 1, x_.d(lv, i, y));
              else
                value = x_.s(lv - 1, j, x_.d(lv, i - 1, y));
              x_.face[lv + 1][i][z] = value;
            }
          }
      if (!found) throw InternalConsistencyError("degenerate simplex without parent");
    }
    ++filled_;
  }
}

Id SSetBuilder::add_simplex(int n, const std::vector<Id>& faces) {
  if (n < 1 || n > x_.truncation) throw StructuralError("simplex level out of range");
  if (static_cast<int>(faces.size()) != n + 1) throw StructuralError("simplex needs n+1 faces");
  ensure_level(n);
  for (Id f : faces)
    if (f < 0 || f >= x_.size(n - 1)) throw StructuralError("face id out of range");
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      if (n >= 2 && x_.d(n - 1, i, faces[j]) != x_.d(n - 1, j - 1, faces[i]))
        throw StructuralError("incompatible face tuple for new simplex");
  std::vector<int> idsurj(n + 1);
  std::iota(idsurj.begin(), idsurj.end(), 0);
  Normal nf{n, static_cast<Id>(nd_ids_[n].size()), idsurj};
  Id id = x_.level_size[n]++;
  normal_[n].push_back(nf);
  normal_index_[n][nf] = id;
  nd_ids_[n].push_back(id);
  nd_faces_[n].push_back(faces);
  for (int i = 0; i <= n; ++i) x_.face[n][i].push_back(faces[i]);
  return id;
}

Id SSetBuilder::degenerate(int n, int i, Id x) {
  ensure_level(n + 1);
  return x_.s(n, i, x);
}

TruncatedSSet SSetBuilder::build() {
  ensure_level(x_.truncation);
  TruncatedSSet out = x_;
  auto rep = validate_sset(out);
  if (!rep.ok())
    throw StructuralError("builder produced an invalid simplicial set: " + rep.summary());
  return out;
}

FaceIndex::FaceIndex(const TruncatedSSet& x) {
  idx_.resize(x.truncation + 1);
  for (int n = 1; n <= x.truncation; ++n) {
    idx_[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      for (Id c = 0; c < x.size(n); ++c) idx_[n][i][x.d(n, i, c)].push_back(c);
  }
}

const std::vector<Id>& FaceIndex::with_face(int n, int i, Id value) const {
  auto it = idx_[n][i].find(value);
  if (it == idx_[n][i].end()) return empty_;
  return it->second;
}

void for_each_horn(const TruncatedSSet& x, const FaceIndex&, int m, int k,
                   const std::function<void(const std::vector<Id>&)>& fn) {
  std::vector<int> pos;
  for (int i = 0; i <= m; ++i)
    if (i != k) pos.push_back(i);
  std::vector<Id> chosen(m + 1, kNone);

  auto compatible = [&](int jpos) {
    int j = pos[jpos];
    for (int t = 0; t < jpos; ++t) {
      int i = pos[t];
      if (m >= 2 && x.d(m - 1, j - 1, chosen[i]) != x.d(m - 1, i, chosen[j])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == pos.size()) {
      std::vector<Id> faces;
      for (int i : pos) faces.push_back(chosen[i]);
      fn(faces);
      return;
    }
    for (Id c = 0; c < x.size(m - 1); ++c) {
      chosen[pos[t]] = c;
      if (compatible(static_cast<int>(t))) self(self, t + 1);
    }
    chosen[pos[t]] = kNone;
  };
  rec(rec, 0);
}

std::optional<Id> horn_fill(const TruncatedSSet& x, const Horn& horn) {
  const int m = horn.m;
  if (m < 1 || m > x.truncation) throw PreconditionError("horn level out of range");
  if (horn.k < 0 || horn.k > m) throw PreconditionError("horn index out of range");
  if (static_cast<int>(horn.faces.size()) != m) throw PreconditionError("horn needs m faces");
  std::vector<Id> at(m + 1, kNone);
  int t = 0;
  for (int i = 0; i <= m; ++i)
    if (i != horn.k) at[i] = horn.faces[t++];
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i < j; ++i) {
      if (i == horn.k || j == horn.k) continue;
      if (m >= 2 && x.d(m - 1, j - 1, at[i]) != x.d(m - 1, i, at[j]))
        throw PreconditionError("incompatible horn tuple at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  for (Id c = 0; c < x.size(m); ++c) {
    bool ok = true;
    for (int i = 0; i <= m && ok; ++i) {
      if (i == horn.k) continue;
      if (x.d(m, i, c) != at[i]) ok = false;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

HornReport is_kan(const TruncatedSSet& x, int up_to) {
  if (up_to > x.truncation - 1)
    throw PreconditionError("Kan check needs fillers one level above the last face level");
  HornReport report;
  FaceIndex index(x);
  for (int m = 1; m <= up_to + 1; ++m) {
    for (int k = 0; k <= m; ++k) {
      for_each_horn(x, index, m, k, [&](const std::vector<Id>& faces) {
        ++report.horns_checked;
        std::vector<Id> at(m + 1, kNone);
        int t = 0;
        for (int i = 0; i <= m; ++i)
          if (i != k) at[i] = faces[t++];
        int first = (k == 0) ? 1 : 0;
        bool filled = false;
        for (Id c : index.with_face(m, first, at[first])) {
          bool ok = true;
          for (int i = 0; i <= m && ok; ++i) {
            if (i == k) continue;
            if (x.d(m, i, c) != at[i]) ok = false;
          }
          if (ok) {
            filled = true;
            break;
          }
        }
        if (!filled) report.unfilled.push_back({m, k, faces});
      });
    }
  }
  return report;
}

}  // namespace hforge::sset
