#include "hforge/ex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hforge::sset {

namespace {

using Chain = std::vector<std::uint32_t>;  // strictly increasing subset bitmasks

// Nondegenerate simplices of sd Δ[n]: strict chains of nonempty subsets of
// [n], listed by dimension then lexicographically.
struct Subdivision {
  int n;
  std::vector<std::vector<Chain>> chains;            // per dimension
  std::vector<std::map<Chain, Id>> index;            // per dimension
  std::vector<std::vector<std::vector<Id>>> faces;   // faces[d][c][i]

  explicit Subdivision(int n_) : n(n_) {
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < (1u << (n + 1)); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end());
    chains.resize(n + 1);
    index.resize(n + 1);
    faces.resize(n + 1);
    // dimension d chains have d+1 strictly increasing subsets
    Chain cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!cur.empty()) {
        int d = static_cast<int>(cur.size()) - 1;
        if (d <= n) {
          index[d][cur] = static_cast<Id>(chains[d].size());
          chains[d].push_back(cur);
        }
        if (d == n) return;
      }
      for (std::size_t i = from; i < subsets.size(); ++i) {
        if (!cur.empty()) {
          // strict inclusion
          std::uint32_t prev = cur.back(), next = subsets[i];
          if ((prev & next) != prev || prev == next) continue;
        }
        cur.push_back(subsets[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (int d = 1; d <= n; ++d) {
      faces[d].resize(chains[d].size());
      for (Id c = 0; c < static_cast<Id>(chains[d].size()); ++c) {
        faces[d][c].resize(d + 1);
        for (int i = 0; i <= d; ++i) {
          Chain f = chains[d][c];
          f.erase(f.begin() + i);
          faces[d][c][i] = index[d - 1].at(f);
        }
      }
    }
  }

  Id total() const {
    Id t = 0;
    for (const auto& cs : chains) t += static_cast<Id>(cs.size());
    return t;
  }
};

// Apply a monotone surjection u : [k] ->> [r] to a level-r simplex.
Id apply_surjection(const TruncatedSSet& x, const std::vector<int>& u, Id simplex) {
  bool idmap = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != static_cast<int>(i)) idmap = false;
  if (idmap) return simplex;
  int i = 0;
  while (u[i] != u[i + 1]) ++i;
  std::vector<int> u2;
  for (std::size_t t = 0; t < u.size(); ++t)
    if (t != static_cast<std::size_t>(i) + 1) u2.push_back(u[t]);
  Id y = apply_surjection(x, u2, simplex);
  return x.s(static_cast<int>(u.size()) - 2, i, y);
}

// An Ex-simplex at level n: one value per nondegenerate chain of sd Δ[n],
// flattened dimension by dimension in chain order.
using Assignment = std::vector<Id>;

struct ExLevel {
  std::vector<Assignment> elements;
  std::map<Assignment, Id> index;
};

// Evaluate an assignment on a possibly weak chain (monotone, repeats
// allowed after applying a subset map).
Id eval_weak_chain(const TruncatedSSet& x, const Subdivision& sd,
                   const std::vector<Id>& offsets, const Assignment& f,
                   const Chain& weak) {
  Chain strict;
  std::vector<int> u(weak.size());
  for (std::size_t i = 0; i < weak.size(); ++i) {
    if (strict.empty() || strict.back() != weak[i]) strict.push_back(weak[i]);
    u[i] = static_cast<int>(strict.size()) - 1;
  }
  int d = static_cast<int>(strict.size()) - 1;
  Id core = f[offsets[d] + sd.index[d].at(strict)];
  return apply_surjection(x, u, core);
}

std::vector<Id> dimension_offsets(const Subdivision& sd) {
  std::vector<Id> offsets(sd.n + 1, 0);
  for (int d = 1; d <= sd.n; ++d)
    offsets[d] = offsets[d - 1] + static_cast<Id>(sd.chains[d - 1].size());
  return offsets;
}

}  // namespace

ExResult ex_once(const TruncatedSSet& x, std::size_t budget) {
  check_wellformed(x);
  const int truncation = x.truncation;
  std::vector<Subdivision> sds;
  sds.reserve(truncation + 2);
  for (int n = 0; n <= truncation + 1; ++n) sds.emplace_back(n);

  FaceIndex xidx(x);
  std::vector<ExLevel> levels(truncation + 1);
  std::size_t total_elements = 0;

  for (int n = 0; n <= truncation; ++n) {
    const Subdivision& sd = sds[n];
    auto offsets = dimension_offsets(sd);
    Assignment cur(sd.total(), kNone);
    auto rec = [&](auto&& self, int d, Id c) -> void {
      if (d > n) {
        if (++total_elements > budget)
          throw BoundError("Ex enumeration exceeded budget of " + std::to_string(budget) +
                           " elements at level " + std::to_string(n));
        levels[n].index.emplace(cur, static_cast<Id>(levels[n].elements.size()));
        levels[n].elements.push_back(cur);
        return;
      }
      if (c == static_cast<Id>(sd.chains[d].size())) {
        self(self, d + 1, 0);
        return;
      }
      if (d == 0) {
        for (Id v = 0; v < x.size(0); ++v) {
          cur[offsets[0] + c] = v;
          self(self, d, c + 1);
        }
        cur[offsets[0] + c] = kNone;
        return;
      }
      // candidates must match all already-assigned faces
      Id first_face = cur[offsets[d - 1] + sd.faces[d][c][0]];
      for (Id cand : xidx.with_face(d, 0, first_face)) {
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i)
          if (x.d(d, i, cand) != cur[offsets[d - 1] + sd.faces[d][c][i]]) ok = false;
        if (!ok) continue;
        cur[offsets[d] + c] = cand;
        self(self, d, c + 1);
      }
      cur[offsets[d] + c] = kNone;
    };
    rec(rec, 0, 0);
  }

  TruncatedSSet out;
  out.name = "Ex(" + x.name + ")";
  out.truncation = truncation;
  for (int n = 0; n <= truncation; ++n)
    out.level_size.push_back(static_cast<Id>(levels[n].elements.size()));
  out.face.resize(truncation + 1);
  out.degen.resize(std::max(truncation, 0));

  // faces: precompose with sd(d^i); subset maps are injective so chains
  // stay strict
  for (int n = 1; n <= truncation; ++n) {
    const Subdivision& sd_small = sds[n - 1];
    const Subdivision& sd_big = sds[n];
    auto off_small = dimension_offsets(sd_small);
    auto off_big = dimension_offsets(sd_big);
    out.face[n].assign(n + 1, std::vector<Id>(out.size(n)));
    for (int i = 0; i <= n; ++i) {
      // d^i : [n-1] -> [n] on subsets
      auto map_subset = [&](std::uint32_t s) {
        std::uint32_t r = 0;
        for (int b = 0; b <= n - 1; ++b)
          if (s >> b & 1) r |= 1u << (b >= i ? b + 1 : b);
        return r;
      };
      for (Id el = 0; el < out.size(n); ++el) {
        const Assignment& f = levels[n].elements[el];
        Assignment g(sd_small.total());
        for (int d = 0; d <= n - 1; ++d)
          for (Id c = 0; c < static_cast<Id>(sd_small.chains[d].size()); ++c) {
            Chain mapped;
            for (std::uint32_t s : sd_small.chains[d][c]) mapped.push_back(map_subset(s));
            g[off_small[d] + c] = f[off_big[d] + sd_big.index[d].at(mapped)];
          }
        out.face[n][i][el] = levels[n - 1].index.at(g);
      }
    }
  }

  // degeneracies: precompose with sd(s^i); chains can collapse
  for (int n = 0; n < truncation; ++n) {
    const Subdivision& sd_small = sds[n];
    const Subdivision& sd_big = sds[n + 1];
    auto off_small = dimension_offsets(sd_small);
    out.degen[n].assign(n + 1, std::vector<Id>(out.size(n)));
    for (int i = 0; i <= n; ++i) {
      // s^i : [n+1] -> [n] on subsets
      auto map_subset = [&](std::uint32_t s) {
        std::uint32_t r = 0;
        for (int b = 0; b <= n + 1; ++b)
          if (s >> b & 1) r |= 1u << (b > i ? b - 1 : b);
        return r;
      };
      for (Id el = 0; el < out.size(n); ++el) {
        const Assignment& f = levels[n].elements[el];
        Assignment g(sd_big.total());
        auto off_big = dimension_offsets(sd_big);
        for (int d = 0; d <= n + 1; ++d)
          for (Id c = 0; c < static_cast<Id>(sd_big.chains[d].size()); ++c) {
            Chain weak;
            for (std::uint32_t s : sd_big.chains[d][c]) weak.push_back(map_subset(s));
            g[off_big[d] + c] = eval_weak_chain(x, sd_small, off_small, f, weak);
          }
        out.degen[n][i][el] = levels[n + 1].index.at(g);
      }
    }
  }

  // natural map by the last-vertex poset map
  ExResult res;
  res.natural.level.resize(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    const Subdivision& sd = sds[n];
    auto offsets = dimension_offsets(sd);
    res.natural.level[n].resize(x.size(n));
    for (Id simplex = 0; simplex < x.size(n); ++simplex) {
      Assignment g(sd.total());
      for (int d = 0; d <= n; ++d)
        for (Id c = 0; c < static_cast<Id>(sd.chains[d].size()); ++c) {
          std::vector<int> lv;
          for (std::uint32_t s : sd.chains[d][c]) {
            int top = 31 - __builtin_clz(s);
            lv.push_back(top);
          }
          g[offsets[d] + c] = apply_monotone(x, lv, n, simplex);
        }
      res.natural.level[n][simplex] = levels[n].index.at(g);
    }
  }
  res.space = std::move(out);
  return res;
}

ExResult ex_iterated(const TruncatedSSet& x, int k, std::size_t budget) {
  if (k < 1) throw PreconditionError("ex iteration count must be >= 1");
  ExResult acc = ex_once(x, budget);
  for (int step = 1; step < k; ++step) {
    ExResult next = ex_once(acc.space, budget);
    acc.natural = compose(next.natural, acc.natural);
    acc.space = std::move(next.space);
  }
  return acc;
}

}  // namespace hforge::sset
