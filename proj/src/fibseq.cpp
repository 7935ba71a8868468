#include "hforge/fibseq.hpp"

#include <algorithm>

namespace hforge::sset {

ValidationReport check_fibration(const SimplicialMap& p, const TruncatedSSet& e,
                                 const TruncatedSSet& b) {
  ValidationReport rep;
  auto prep = validate_simplicial_map(p, e, b);
  if (!prep.ok()) throw StructuralError("p is not simplicial: " + prep.summary());
  FaceIndex eidx(e);
  FaceIndex bidx(b);
  for (int m = 1; m <= std::min(e.truncation, b.truncation); ++m) {
    for (int k = 0; k <= m; ++k) {
      for_each_horn(e, eidx, m, k, [&](const std::vector<Id>& faces) {
        std::vector<Id> at(m + 1, kNone);
        int t = 0;
        for (int i = 0; i <= m; ++i)
          if (i != k) at[i] = faces[t++];
        // candidate fillers y of the image horn in b
        int first = (k == 0) ? 1 : 0;
        for (Id y : bidx.with_face(m, first, p.level[m - 1][at[first]])) {
          bool image_matches = true;
          for (int i = 0; i <= m && image_matches; ++i) {
            if (i == k) continue;
            if (b.face[m][i][y] != p.level[m - 1][at[i]]) image_matches = false;
          }
          if (!image_matches) continue;
          bool lifted = false;
          for (Id x : eidx.with_face(m, first, at[first])) {
            if (p.level[m][x] != y) continue;
            bool ok = true;
            for (int i = 0; i <= m && ok; ++i) {
              if (i == k) continue;
              if (e.d(m, i, x) != at[i]) ok = false;
            }
            if (ok) {
              lifted = true;
              break;
            }
          }
          if (!lifted) {
            std::vector<std::int64_t> wit = {m, k, y};
            for (Id f : faces) wit.push_back(f);
            rep.add("fibration", "horn over a filled base has no lift", wit);
          }
        }
      });
    }
  }
  return rep;
}

ValidationReport check_fibre_sequence(const FibreSequenceWitness& w) {
  ValidationReport rep;
  auto qrep = validate_simplicial_map(w.q, w.fibre.space, w.total.space);
  if (!qrep.ok()) throw StructuralError("q is not simplicial: " + qrep.summary());
  auto prep = validate_simplicial_map(w.p, w.total.space, w.base.space);
  if (!prep.ok()) throw StructuralError("p is not simplicial: " + prep.summary());
  if (w.q.level[0][w.fibre.basepoint] != w.total.basepoint)
    rep.add("pointed", "q does not preserve the basepoint", {});
  if (w.p.level[0][w.total.basepoint] != w.base.basepoint)
    rep.add("pointed", "p does not preserve the basepoint", {});

  // condition 1: p is a fibration and levelwise surjective
  auto fib = check_fibration(w.p, w.total.space, w.base.space);
  for (auto& v : fib.violations) rep.violations.push_back(std::move(v));
  int levels = std::min(w.total.space.truncation, w.base.space.truncation);
  for (int n = 0; n <= levels; ++n) {
    std::vector<char> hit(w.base.space.size(n), 0);
    for (Id x = 0; x < w.total.space.size(n); ++x) hit[w.p.level[n][x]] = 1;
    for (Id y = 0; y < w.base.space.size(n); ++y)
      if (!hit[y]) rep.add("surjectivity", "p misses a base simplex", {n, y});
  }

  // condition 2: q levelwise injective
  int qlevels = std::min(w.fibre.space.truncation, w.total.space.truncation);
  for (int n = 0; n <= qlevels; ++n) {
    std::map<Id, Id> seen;
    for (Id z = 0; z < w.fibre.space.size(n); ++z) {
      auto [it, fresh] = seen.emplace(w.q.level[n][z], z);
      if (!fresh)
        rep.add("injectivity", "q identifies two fibre simplices",
                {n, it->second, z});
    }
  }

  // condition 3: q(F_n) = p_n^{-1}(degenerate basepoint)
  for (int n = 0; n <= std::min(qlevels, levels); ++n) {
    Id bb = w.base.space.degenerate_vertex(w.base.basepoint, n);
    std::vector<char> in_image(w.total.space.size(n), 0);
    for (Id z = 0; z < w.fibre.space.size(n); ++z) in_image[w.q.level[n][z]] = 1;
    for (Id x = 0; x < w.total.space.size(n); ++x) {
      bool in_fibre = w.p.level[n][x] == bb;
      if (in_fibre && !in_image[x])
        rep.add("fibre-identification", "fibre simplex not in the image of q", {n, x});
      if (!in_fibre && in_image[x])
        rep.add("fibre-identification", "q lands outside the fibre", {n, x});
    }
  }
  return rep;
}

FibreSequenceWitness product_fibre_sequence(const PointedSSet& f, const PointedSSet& b) {
  FibreSequenceWitness w;
  w.fibre = f;
  w.base = b;
  w.total.space = product(f.space, b.space);
  w.total.basepoint = f.basepoint * b.space.size(0) + b.basepoint;
  w.q = include_first(f.space, b.space, b.basepoint);
  w.p = projection_second(f.space, b.space);
  return w;
}

namespace {

struct MaybePi {
  bool available = false;
  HomotopyGroupResult value;
};

MaybePi try_pi(const PointedSSet& x, int n) {
  MaybePi out;
  if (x.space.truncation < n + 2) return out;
  try {
    out.value = simplicial_pi(x, n);
    out.available = true;
  } catch (const PreconditionError&) {
  }
  return out;
}

}  // namespace

LesReport les_check(const FibreSequenceWitness& w, int up_to) {
  auto seq = check_fibre_sequence(w);
  if (!seq.ok())
    throw PreconditionError("not a fibre sequence: " + seq.summary());

  LesReport rep;
  std::map<int, MaybePi> pif, pie, pib;
  for (int n = 0; n <= up_to + 1; ++n) {
    pif[n] = try_pi(w.fibre, n);
    pie[n] = try_pi(w.total, n);
    pib[n] = try_pi(w.base, n);
  }

  // q^{-1} on each level for the boundary construction
  std::vector<std::map<Id, Id>> qinv(w.fibre.space.truncation + 1);
  for (int n = 0; n <= std::min(w.fibre.space.truncation, w.total.space.truncation); ++n)
    for (Id z = 0; z < w.fibre.space.size(n); ++z) qinv[n][w.q.level[n][z]] = z;

  auto induced = [&](const SimplicialMap& f, const PointedSSet& a, const PointedSSet& c,
                     int n, const MaybePi& pa, const MaybePi& pc) {
    return pi_of_map(f, a, c, n, pa.value, pc.value);
  };

  // boundary: lift a representative of pi_{n+1}(B) into E with all faces
  // except the last at the basepoint, then read the last face in F
  auto boundary = [&](int n) -> std::vector<int> {
    const auto& top = pib.at(n + 1).value;
    const auto& bot = pif.at(n).value;
    std::vector<int> delta(top.num_classes, -1);
    Id be = w.total.space.degenerate_vertex(w.total.basepoint, n);
    for (std::size_t i = 0; i < top.carrier.size(); ++i) {
      Id y = top.carrier[i];
      int found = -1;
      for (Id xx = 0; xx < w.total.space.size(n + 1); ++xx) {
        if (w.p.level[n + 1][xx] != y) continue;
        bool ok = true;
        for (int t = 0; t <= n && ok; ++t)
          if (w.total.space.d(n + 1, t, xx) != be) ok = false;
        if (!ok) continue;
        Id last = w.total.space.d(n + 1, n + 1, xx);
        auto it = qinv[n].find(last);
        if (it == qinv[n].end())
          throw InternalConsistencyError("boundary lift leaves the fibre");
        int cls = bot.class_of_simplex(it->second);
        if (found == -1)
          found = cls;
        else if (found != cls)
          throw InternalConsistencyError("boundary depends on the chosen lift");
      }
      if (found == -1)
        throw InternalConsistencyError("no boundary lift despite fibration check");
      int& slot = delta[top.class_of[i]];
      if (slot == -1)
        slot = found;
      else if (slot != found)
        throw InternalConsistencyError("boundary depends on the representative");
    }
    return delta;
  };

  for (int n = 0; n <= up_to; ++n) {
    // slot at pi_n(E): ker p_* = im q_*
    {
      LesSlot slot{n, "E", SlotStatus::inconclusive, ""};
      if (pif.at(n).available && pie.at(n).available && pib.at(n).available) {
        auto qs = induced(w.q, w.fibre, w.total, n, pif.at(n), pie.at(n));
        auto ps = induced(w.p, w.total, w.base, n, pie.at(n), pib.at(n));
        std::vector<char> in_image(pie.at(n).value.num_classes, 0);
        for (int c : qs.on_classes) in_image[c] = 1;
        slot.status = SlotStatus::exact;
        for (int c = 0; c < pie.at(n).value.num_classes; ++c) {
          bool in_ker = ps.on_classes[c] == pib.at(n).value.identity_class;
          if (in_ker != static_cast<bool>(in_image[c])) {
            slot.status = SlotStatus::failed;
            slot.note = "class " + std::to_string(c);
          }
        }
      } else {
        slot.note = "homotopy groups unavailable at this truncation";
      }
      rep.slots.push_back(slot);
    }
    // slot at pi_n(F): ker q_* = im delta
    {
      LesSlot slot{n, "F", SlotStatus::inconclusive, ""};
      if (pif.at(n).available && pie.at(n).available && pib.at(n + 1).available) {
        auto qs = induced(w.q, w.fibre, w.total, n, pif.at(n), pie.at(n));
        auto delta = boundary(n);
        rep.boundary[n] = delta;
        std::vector<char> in_image(pif.at(n).value.num_classes, 0);
        for (int c : delta) in_image[c] = 1;
        slot.status = SlotStatus::exact;
        for (int c = 0; c < pif.at(n).value.num_classes; ++c) {
          bool in_ker = qs.on_classes[c] == pie.at(n).value.identity_class;
          if (in_ker != static_cast<bool>(in_image[c])) {
            slot.status = SlotStatus::failed;
            slot.note = "class " + std::to_string(c);
          }
        }
      } else {
        slot.note = "needs pi_" + std::to_string(n + 1) + "(B)";
      }
      rep.slots.push_back(slot);
    }
    // slot at pi_n(B), n >= 1: ker delta = im p_*
    if (n >= 1) {
      LesSlot slot{n, "B", SlotStatus::inconclusive, ""};
      if (pie.at(n).available && pib.at(n).available && pif.at(n - 1).available) {
        auto ps = induced(w.p, w.total, w.base, n, pie.at(n), pib.at(n));
        auto delta = boundary(n - 1);
        rep.boundary[n - 1] = delta;
        std::vector<char> in_image(pib.at(n).value.num_classes, 0);
        for (int c : ps.on_classes) in_image[c] = 1;
        slot.status = SlotStatus::exact;
        for (int c = 0; c < pib.at(n).value.num_classes; ++c) {
          bool in_ker = delta[c] == pif.at(n - 1).value.identity_class;
          if (in_ker != static_cast<bool>(in_image[c])) {
            slot.status = SlotStatus::failed;
            slot.note = "class " + std::to_string(c);
          }
        }
      } else {
        slot.note = "needs pi_" + std::to_string(n - 1) + "(F)";
      }
      rep.slots.push_back(slot);
    }
  }
  return rep;
}

}  // namespace hforge::sset
