#include "hforge/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace hforge::model {

namespace {

std::vector<Id> mask_to_ids(const std::vector<char>& mask) {
  std::vector<Id> out;
  for (Id i = 0; i < static_cast<Id>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

int effective_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HFORGE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

std::vector<Id> ModelStructure::class_w() const { return mask_to_ids(in_w); }
std::vector<Id> ModelStructure::class_f() const { return mask_to_ids(in_f); }
std::vector<Id> ModelStructure::class_c() const { return mask_to_ids(in_c); }

ModelStructure ModelStructure::from_sets(FinCategory base, const std::vector<Id>& w,
                                         const std::vector<Id>& f,
                                         const std::vector<Id>& c) {
  ModelStructure m;
  const Id nm = base.num_morphisms();
  m.base = std::move(base);
  m.in_w.assign(nm, 0);
  m.in_f.assign(nm, 0);
  m.in_c.assign(nm, 0);
  for (Id i : w) {
    if (i < 0 || i >= nm) throw StructuralError("W contains id outside morphism set");
    m.in_w[i] = 1;
  }
  for (Id i : f) {
    if (i < 0 || i >= nm) throw StructuralError("F contains id outside morphism set");
    m.in_f[i] = 1;
  }
  for (Id i : c) {
    if (i < 0 || i >= nm) throw StructuralError("C contains id outside morphism set");
    m.in_c[i] = 1;
  }
  return m;
}

ValidationReport check_bicompleteness(const FinCategory& base, int shape_object_bound) {
  ValidationReport rep;
  std::vector<FinCategory> shapes;
  shapes.push_back(cat::shape_empty());
  if (shape_object_bound >= 1) shapes.push_back(cat::discrete_category(1));
  if (shape_object_bound >= 2) {
    shapes.push_back(cat::discrete_category(2));
    shapes.push_back(cat::chain_poset(2));
    shapes.push_back(cat::shape_parallel_pair());
  }
  if (shape_object_bound >= 3) {
    shapes.push_back(cat::discrete_category(3));
    shapes.push_back(cat::chain_poset(3));
  }
  shapes.push_back(cat::shape_span());
  shapes.push_back(cat::shape_cospan());

  for (const auto& shape : shapes) {
    for (const auto& d : cat::all_diagrams(base, shape)) {
      auto lim = cat::finite_limit(base, d);
      if (std::holds_alternative<cat::NoLimit>(lim)) {
        std::vector<std::int64_t> wit;
        for (Id o : d.object_label) wit.push_back(o);
        rep.add("bicompleteness", "missing limit over shape " + shape.name, wit);
      }
      auto colim = cat::finite_colimit(base, d);
      if (std::holds_alternative<cat::NoLimit>(colim)) {
        std::vector<std::int64_t> wit;
        for (Id o : d.object_label) wit.push_back(o);
        rep.add("bicompleteness", "missing colimit over shape " + shape.name, wit);
      }
    }
  }
  return rep;
}

namespace {

// Axioms other than bicompleteness; fast path shared by enumeration.
void check_class_axioms(const ModelStructure& m, ValidationReport& rep) {
  const FinCategory& c = m.base;
  const Id nm = c.num_morphisms();

  for (Id x = 0; x < c.num_objects; ++x) {
    Id e = c.identity[x];
    if (!m.w(e) || !m.f_(e) || !m.c(e))
      rep.add("identities-in-classes", "identity missing from W∩F∩C", {x, e});
  }

  const std::vector<const std::vector<char>*> classes = {&m.in_w, &m.in_f, &m.in_c};
  const char* class_names[] = {"W", "F", "C"};

  // Closure of each class under composition.
  for (int k = 0; k < 3; ++k) {
    const auto& cls = *classes[k];
    for (Id f = 0; f < nm; ++f) {
      if (!cls[f]) continue;
      for (Id g = 0; g < nm; ++g) {
        if (!cls[g] || !c.composable(f, g)) continue;
        Id fg = c.compose(f, g);
        if (fg != kNone && !cls[fg])
          rep.add("class-composition",
                  std::string(class_names[k]) + " not closed under composition", {f, g, fg});
      }
    }
  }

  // Two out of three for W, in the factor-propagating form.
  for (Id f = 0; f < nm; ++f)
    for (Id g = 0; g < nm; ++g) {
      if (!c.composable(f, g)) continue;
      Id fg = c.compose(f, g);
      if (fg == kNone) continue;
      if (m.w(fg) && (m.w(f) || m.w(g)) && (!m.w(f) || !m.w(g)))
        rep.add("two-of-three", "fg and one factor in W but not both factors", {f, g, fg});
    }

  // Retract closure, raw quantifier form: (r,i) and (r',i') with ri = id and
  // r'i' = id, g in the class spanning t(i) -> t(i'), forces every parallel
  // f : s(i) -> s(i') into the class.
  std::vector<std::pair<Id, Id>> sections;  // (i, r) with r∘i = id
  for (Id i = 0; i < nm; ++i)
    for (Id r = 0; r < nm; ++r) {
      if (!c.composable(r, i)) continue;
      if (c.compose(r, i) == c.identity[c.src(i)] && c.tgt(r) == c.src(i))
        sections.push_back({i, r});
    }
  for (int k = 0; k < 3; ++k) {
    const auto& cls = *classes[k];
    for (auto [i, r] : sections)
      for (auto [i2, r2] : sections) {
        bool has_g = false;
        Id g_wit = kNone;
        for (Id g = 0; g < nm; ++g)
          if (cls[g] && c.src(g) == c.tgt(i) && c.tgt(g) == c.tgt(i2)) {
            has_g = true;
            g_wit = g;
            break;
          }
        if (!has_g) continue;
        for (Id f = 0; f < nm; ++f)
          if (c.src(f) == c.src(i) && c.tgt(f) == c.src(i2) && !cls[f])
            rep.add("retract", std::string(class_names[k]) + " not closed under retract",
                    {f, g_wit, i, r, i2, r2});
      }
  }

  // Lifting: commuting squares with i in C, p in F, one of them in W.
  for (Id i = 0; i < nm; ++i) {
    if (!m.c(i)) continue;
    for (Id p = 0; p < nm; ++p) {
      if (!m.f_(p)) continue;
      if (!m.w(i) && !m.w(p)) continue;
      for (Id f : c.hom(c.src(i), c.src(p)))
        for (Id g : c.hom(c.tgt(i), c.tgt(p))) {
          if (c.compose(p, f) != c.compose(g, i)) continue;
          bool lifted = false;
          for (Id h : c.hom(c.tgt(i), c.src(p)))
            if (c.compose(h, i) == f && c.compose(p, h) == g) {
              lifted = true;
              break;
            }
          if (!lifted)
            rep.add("lifting", "commuting square with no diagonal", {i, p, f, g});
        }
    }
  }

  // Both factorizations.
  for (Id f = 0; f < nm; ++f) {
    bool fw_c = false, f_cw = false;
    for (Id p = 0; p < nm && !(fw_c && f_cw); ++p)
      for (Id i = 0; i < nm; ++i) {
        if (!c.composable(p, i) || c.compose(p, i) != f) continue;
        if (m.f_(p) && m.w(p) && m.c(i)) fw_c = true;
        if (m.f_(p) && m.c(i) && m.w(i)) f_cw = true;
      }
    if (!fw_c)
      rep.add("factorization", "no factorization f = (F∩W)∘C", {f});
    if (!f_cw)
      rep.add("factorization", "no factorization f = F∘(C∩W)", {f});
  }
}

}  // namespace

ValidationReport validate_model_structure(const ModelStructure& m,
                                          const ValidateOptions& opt) {
  cat::check_wellformed(m.base);
  const Id nm = m.base.num_morphisms();
  if (static_cast<Id>(m.in_w.size()) != nm || static_cast<Id>(m.in_f.size()) != nm ||
      static_cast<Id>(m.in_c.size()) != nm)
    throw StructuralError("class mask size != morphism count");

  ValidationReport rep;
  if (opt.check_bicomplete) {
    auto bc = check_bicompleteness(m.base, opt.shape_object_bound);
    for (auto& v : bc.violations) rep.violations.push_back(std::move(v));
  }
  check_class_axioms(m, rep);
  return rep;
}

std::vector<ModelStructure> enumerate_model_structures(const FinCategory& base,
                                                       int max_morphisms, int threads) {
  cat::check_wellformed(base);
  const Id nm = base.num_morphisms();
  if (nm > max_morphisms) {
    std::vector<Id> free;
    for (Id f = 0; f < nm; ++f)
      if (!base.is_identity(f)) free.push_back(f);
    throw BoundError("base has " + std::to_string(nm) + " morphisms (bound " +
                     std::to_string(max_morphisms) + "); search space is 2^" +
                     std::to_string(3 * free.size()) + " triples");
  }
  if (!check_bicompleteness(base).ok()) return {};

  std::vector<Id> free;
  for (Id f = 0; f < nm; ++f)
    if (!base.is_identity(f)) free.push_back(f);
  const int k = static_cast<int>(free.size());
  const std::uint64_t limit = 1ull << k;

  auto build = [&](std::uint64_t wm, std::uint64_t fm, std::uint64_t cm) {
    ModelStructure m;
    m.base = base;
    m.in_w.assign(nm, 0);
    m.in_f.assign(nm, 0);
    m.in_c.assign(nm, 0);
    for (Id x = 0; x < base.num_objects; ++x) {
      Id e = base.identity[x];
      m.in_w[e] = m.in_f[e] = m.in_c[e] = 1;
    }
    for (int b = 0; b < k; ++b) {
      if (wm >> b & 1) m.in_w[free[b]] = 1;
      if (fm >> b & 1) m.in_f[free[b]] = 1;
      if (cm >> b & 1) m.in_c[free[b]] = 1;
    }
    return m;
  };

  const int nthreads = std::min<std::uint64_t>(effective_threads(threads), limit);
  std::vector<std::vector<ModelStructure>> shard(nthreads);
  auto work = [&](int t) {
    for (std::uint64_t wm = t; wm < limit; wm += nthreads)
      for (std::uint64_t fm = 0; fm < limit; ++fm)
        for (std::uint64_t cm = 0; cm < limit; ++cm) {
          ModelStructure m = build(wm, fm, cm);
          ValidationReport rep;
          check_class_axioms(m, rep);
          if (rep.ok()) shard[t].push_back(std::move(m));
        }
  };
  if (nthreads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::vector<ModelStructure> out;
  for (auto& s : shard)
    for (auto& m : s) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const ModelStructure& a, const ModelStructure& b) {
    if (a.in_w != b.in_w) return a.in_w < b.in_w;
    if (a.in_f != b.in_f) return a.in_f < b.in_f;
    return a.in_c < b.in_c;
  });
  return out;
}

namespace {

Id unique_morphism(const FinCategory& c, Id x, Id y, const char* what) {
  auto h = c.hom(x, y);
  if (h.size() != 1)
    throw InternalConsistencyError(std::string("expected unique morphism (") + what + "), found " +
                                   std::to_string(h.size()));
  return h[0];
}

}  // namespace

bool is_cofibrant(const ModelStructure& m, Id x) {
  auto init = cat::initial_object(m.base);
  if (!init) throw PreconditionError("base has no initial object");
  return m.c(unique_morphism(m.base, *init, x, "initial to X"));
}

bool is_fibrant(const ModelStructure& m, Id x) {
  auto term = cat::terminal_object(m.base);
  if (!term) throw PreconditionError("base has no terminal object");
  return m.f_(unique_morphism(m.base, x, *term, "X to terminal"));
}

ReplacementWitness replacement(const ModelStructure& m, Id x, bool fibrant_kind) {
  const FinCategory& c = m.base;
  ReplacementWitness best;
  best.object = x;
  best.fibrant_kind = fibrant_kind;
  if (!fibrant_kind) {
    auto init = cat::initial_object(c);
    if (!init) throw PreconditionError("base has no initial object");
    Id to_x = unique_morphism(c, *init, x, "initial to X");
    for (Id q = 0; q < c.num_objects; ++q) {
      for (Id i : c.hom(*init, q)) {
        if (!m.c(i)) continue;
        for (Id p : c.hom(q, x)) {
          if (!m.f_(p) || !m.w(p)) continue;
          if (c.compose(p, i) != to_x) continue;
          best.replacement = q;
          best.connecting = p;
          return best;
        }
      }
    }
  } else {
    auto term = cat::terminal_object(c);
    if (!term) throw PreconditionError("base has no terminal object");
    Id from_x = unique_morphism(c, x, *term, "X to terminal");
    for (Id r = 0; r < c.num_objects; ++r) {
      for (Id i : c.hom(x, r)) {
        if (!m.c(i) || !m.w(i)) continue;
        for (Id p : c.hom(r, *term)) {
          if (!m.f_(p)) continue;
          if (c.compose(p, i) != from_x) continue;
          best.replacement = r;
          best.connecting = i;
          return best;
        }
      }
    }
  }
  throw InternalConsistencyError("no replacement found; factorization axiom violated");
}

bool homotopic_witness_exists(const ModelStructure& m, Id f, Id g, HomotopyWitness* out) {
  const FinCategory& c = m.base;
  if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g))
    throw PreconditionError("homotopy between non-parallel morphisms");
  Id a = c.src(f), x = c.tgt(f);
  Id id_a = c.identity[a];
  for (Id cyl = 0; cyl < c.num_objects; ++cyl)
    for (Id p : c.hom(cyl, a)) {
      if (!m.w(p)) continue;
      for (Id i0 : c.hom(a, cyl)) {
        if (c.compose(p, i0) != id_a) continue;
        for (Id i1 : c.hom(a, cyl)) {
          if (c.compose(p, i1) != id_a) continue;
          for (Id h : c.hom(cyl, x)) {
            if (c.compose(h, i0) == f && c.compose(h, i1) == g) {
              if (out) *out = {cyl, i0, i1, p, h};
              return true;
            }
          }
        }
      }
    }
  return false;
}

int HomotopyClasses::class_of_morphism(Id f) const {
  for (std::size_t i = 0; i < hom.size(); ++i)
    if (hom[i] == f) return class_of[i];
  throw PreconditionError("morphism not in the hom-set");
}

HomotopyClasses homotopy_classes(const ModelStructure& m, Id a, Id x) {
  if (!is_cofibrant(m, a))
    throw PreconditionError("source object " + std::to_string(a) + " is not cofibrant");
  if (!is_fibrant(m, x))
    throw PreconditionError("target object " + std::to_string(x) + " is not fibrant");

  HomotopyClasses out;
  out.hom = m.base.hom(a, x);
  const int n = static_cast<int>(out.hom.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HomotopyWitness w;
      if (homotopic_witness_exists(m, out.hom[i], out.hom[j], &w)) {
        out.witnesses[{out.hom[i], out.hom[j]}] = w;
        parent[find(i)] = find(j);
      }
    }
  std::map<int, int> root_to_class;
  out.class_of.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end())
      it = root_to_class.emplace(r, static_cast<int>(root_to_class.size())).first;
    out.class_of[i] = it->second;
  }
  out.num_classes = static_cast<int>(root_to_class.size());
  return out;
}

HoCategory homotopy_category(const ModelStructure& m) {
  const FinCategory& c = m.base;
  HoCategory ho;
  ho.rq.resize(c.num_objects);
  for (Id o = 0; o < c.num_objects; ++o) {
    Id q = replacement(m, o, false).replacement;
    Id rq = replacement(m, q, true).replacement;
    if (!is_cofibrant(m, rq) || !is_fibrant(m, rq))
      throw InternalConsistencyError("bifibrant replacement is not bifibrant");
    ho.rq[o] = rq;
  }

  // Hom-sets: homotopy classes between the bifibrant replacements.
  std::vector<std::vector<HomotopyClasses>> cls(c.num_objects);
  FinCategory out;
  out.name = "Ho(" + c.name + ")";
  out.num_objects = c.num_objects;
  // morphism id layout: per (a, b) pair, one id per class
  std::map<std::pair<Id, Id>, std::vector<Id>> class_mor;  // (a,b) -> class -> mor id
  for (Id aa = 0; aa < c.num_objects; ++aa) {
    cls[aa].resize(c.num_objects);
    for (Id b = 0; b < c.num_objects; ++b) {
      cls[aa][b] = homotopy_classes(m, ho.rq[aa], ho.rq[b]);
      auto& ids = class_mor[{aa, b}];
      for (int k = 0; k < cls[aa][b].num_classes; ++k) {
        ids.push_back(out.num_morphisms());
        out.morphisms.push_back({aa, b});
        // smallest representative in hom order
        Id rep = kNone;
        for (std::size_t i = 0; i < cls[aa][b].hom.size(); ++i)
          if (cls[aa][b].class_of[i] == k) {
            rep = cls[aa][b].hom[i];
            break;
          }
        ho.representative.push_back(rep);
      }
    }
  }
  out.identity.resize(c.num_objects);
  for (Id aa = 0; aa < c.num_objects; ++aa) {
    int k = cls[aa][aa].class_of_morphism(c.identity[ho.rq[aa]]);
    out.identity[aa] = class_mor[{aa, aa}][k];
  }
  const Id nm = out.num_morphisms();
  out.compose_table.assign(static_cast<std::size_t>(nm) * nm, kNone);
  for (Id aa = 0; aa < c.num_objects; ++aa)
    for (Id b = 0; b < c.num_objects; ++b)
      for (Id d = 0; d < c.num_objects; ++d) {
        const auto& ab = cls[aa][b];
        const auto& bd = cls[b][d];
        const auto& ad = cls[aa][d];
        for (int k1 = 0; k1 < ab.num_classes; ++k1)
          for (int k2 = 0; k2 < bd.num_classes; ++k2) {
            // compose all representative pairs; must land in one class
            int result = -1;
            for (std::size_t i = 0; i < ab.hom.size(); ++i) {
              if (ab.class_of[i] != k1) continue;
              for (std::size_t j = 0; j < bd.hom.size(); ++j) {
                if (bd.class_of[j] != k2) continue;
                Id comp = c.compose(bd.hom[j], ab.hom[i]);
                int kc = ad.class_of_morphism(comp);
                if (result == -1)
                  result = kc;
                else if (result != kc)
                  throw InternalConsistencyError(
                      "homotopy class composition depends on representatives");
              }
            }
            if (result != -1)
              out.set_compose(class_mor[{b, d}][k2], class_mor[{aa, b}][k1],
                              class_mor[{aa, d}][result]);
          }
      }
  ho.cat = std::move(out);
  return ho;
}

namespace {

struct Word {
  Id src, tgt;
  std::vector<Id> letters;  // < nm: forward arrow; >= nm: inverse of w[letters[i]-nm]
  bool operator<(const Word& o) const {
    if (src != o.src) return src < o.src;
    if (tgt != o.tgt) return tgt < o.tgt;
    return letters < o.letters;
  }
};

struct WordUniverse {
  std::map<Word, int> index;
  std::vector<Word> words;
  std::vector<int> parent;

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int intern(const Word& w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(words.size());
    index.emplace(w, id);
    words.push_back(w);
    parent.push_back(id);
    return id;
  }
};

}  // namespace

WordOracleResult localization_words_oracle(const FinCategory& base,
                                           const std::vector<Id>& w, int max_len,
                                           std::size_t word_budget) {
  if (max_len < 1) throw PreconditionError("max_len must be >= 1");
  cat::check_wellformed(base);
  const Id nm = base.num_morphisms();
  std::vector<char> in_w(nm, 0);
  for (Id f : w) {
    if (f < 0 || f >= nm) throw StructuralError("W id outside morphism set");
    in_w[f] = 1;
  }
  std::vector<Id> winv;  // w list; inverse letter = nm + index
  for (Id f = 0; f < nm; ++f)
    if (in_w[f]) winv.push_back(f);

  auto letter_src = [&](Id l) { return l < nm ? base.src(l) : base.tgt(winv[l - nm]); };
  auto letter_tgt = [&](Id l) { return l < nm ? base.tgt(l) : base.src(winv[l - nm]); };

  auto run = [&](int len) {
    WordUniverse uni;
    // all composable words up to len
    std::vector<int> frontier;
    for (Id o = 0; o < base.num_objects; ++o)
      frontier.push_back(uni.intern({o, o, {}}));
    for (int l = 0; l < len; ++l) {
      std::vector<int> next;
      for (int idx : frontier) {
        Word cur = uni.words[idx];
        for (Id letter = 0; letter < nm + static_cast<Id>(winv.size()); ++letter) {
          if (letter_src(letter) != cur.tgt) continue;
          Word ext = cur;
          ext.letters.push_back(letter);
          ext.tgt = letter_tgt(letter);
          if (uni.words.size() >= word_budget)
            throw BoundError("word oracle budget exceeded at " +
                             std::to_string(uni.words.size()) + " words");
          int before = static_cast<int>(uni.words.size());
          int id = uni.intern(ext);
          if (id == before) next.push_back(id);
        }
      }
      frontier = std::move(next);
    }

    // rewrite moves over the fixed word set
    for (int idx = 0; idx < static_cast<int>(uni.words.size()); ++idx) {
      const Word cur = uni.words[idx];
      const auto& ls = cur.letters;
      // deletion moves and composition moves
      for (std::size_t j = 0; j < ls.size(); ++j) {
        bool deletable = (ls[j] < nm && base.is_identity(ls[j])) ||
                         (ls[j] >= nm && base.is_identity(winv[ls[j] - nm]));
        if (deletable) {
          Word red = cur;
          red.letters.erase(red.letters.begin() + j);
          uni.unite(idx, uni.intern(red));
        }
        if (j + 1 < ls.size()) {
          Id a = ls[j], b = ls[j + 1];
          if (a < nm && b < nm && base.composable(b, a)) {
            Id ba = base.compose(b, a);
            if (ba != kNone) {
              Word red = cur;
              red.letters[j] = ba;
              red.letters.erase(red.letters.begin() + j + 1);
              uni.unite(idx, uni.intern(red));
            }
          }
          bool cancel = (a < nm && b >= nm && winv[b - nm] == a) ||
                        (a >= nm && b < nm && winv[a - nm] == b);
          if (cancel) {
            Word red = cur;
            red.letters.erase(red.letters.begin() + j, red.letters.begin() + j + 2);
            uni.unite(idx, uni.intern(red));
          }
          // x̄ then ȳ is the reverse of (y then x); collapses when x∘y
          // carries an inverse letter of its own
          if (a >= nm && b >= nm) {
            Id x = winv[a - nm], y = winv[b - nm];
            if (base.composable(x, y)) {
              Id xy = base.compose(x, y);
              if (xy != kNone && in_w[xy]) {
                Id inv_letter = nm + static_cast<Id>(std::lower_bound(winv.begin(), winv.end(), xy) -
                                                     winv.begin());
                Word red = cur;
                red.letters[j] = inv_letter;
                red.letters.erase(red.letters.begin() + j + 1);
                uni.unite(idx, uni.intern(red));
              }
            }
          }
        }
      }
      // insertion of w·w̄ / w̄·w at any position (stay within len)
      if (static_cast<int>(ls.size()) + 2 <= len) {
        for (std::size_t j = 0; j <= ls.size(); ++j) {
          Id at = (j == 0) ? cur.src : letter_tgt(ls[j - 1]);
          for (std::size_t wi = 0; wi < winv.size(); ++wi) {
            Id f = winv[wi];
            Id inv = nm + static_cast<Id>(wi);
            if (base.src(f) == at) {
              Word ext = cur;
              ext.letters.insert(ext.letters.begin() + j, {f, inv});
              uni.unite(idx, uni.intern(ext));
            }
            if (base.tgt(f) == at) {
              Word ext = cur;
              ext.letters.insert(ext.letters.begin() + j, {inv, f});
              uni.unite(idx, uni.intern(ext));
            }
          }
        }
      }
    }
    // Every rewrite of a word of length <= len is itself a composable word
    // of length <= len, so intern() never grows the universe here and one
    // full pass adds every edge of the rewrite graph.
    std::vector<std::vector<int>> counts(base.num_objects,
                                         std::vector<int>(base.num_objects, 0));
    std::map<int, bool> seen;
    for (int idx = 0; idx < static_cast<int>(uni.words.size()); ++idx) {
      int r = uni.find(idx);
      if (!seen.emplace(r, true).second) continue;
      counts[uni.words[r].src][uni.words[r].tgt]++;
    }
    // unions never cross endpoint pairs, so root endpoints are representative
    return counts;
  };

  WordOracleResult res;
  auto prev = run(max_len - 1 >= 0 ? max_len - 1 : 0);
  res.hom_classes = run(max_len);
  res.stabilized = (prev == res.hom_classes);
  return res;
}

AdjunctionData identity_adjunction(const FinCategory& base) {
  AdjunctionData a;
  a.left = cat::identity_functor(base);
  a.right = a.left;
  a.phi.resize(base.num_objects);
  for (Id x = 0; x < base.num_objects; ++x) {
    a.phi[x].resize(base.num_objects);
    for (Id y = 0; y < base.num_objects; ++y)
      for (Id h : base.hom(x, y)) a.phi[x][y].push_back({h, h});
  }
  return a;
}

ValidationReport validate_quillen_functor(const ModelStructure& m,
                                          const ModelStructure& m2,
                                          const AdjunctionData& adj) {
  const FinCategory& a = m.base;
  const FinCategory& b = m2.base;
  ValidationReport rep;
  auto lrep = cat::validate_functor(adj.left, a, b);
  auto rrep = cat::validate_functor(adj.right, b, a);
  if (!lrep.ok()) {
    for (auto& v : lrep.violations) {
      v.axiom = "left-functor";
      rep.violations.push_back(std::move(v));
    }
  }
  if (!rrep.ok()) {
    for (auto& v : rrep.violations) {
      v.axiom = "right-functor";
      rep.violations.push_back(std::move(v));
    }
  }

  if (static_cast<Id>(adj.phi.size()) != a.num_objects)
    throw StructuralError("phi table has wrong object count");

  // Bijection Hom_B(LX, Y) -> Hom_A(X, RY) per pair, plus naturality.
  std::vector<std::vector<std::map<Id, Id>>> phi(a.num_objects);
  for (Id x = 0; x < a.num_objects; ++x) {
    if (static_cast<Id>(adj.phi[x].size()) != b.num_objects)
      throw StructuralError("phi table has wrong object count");
    phi[x].resize(b.num_objects);
    for (Id y = 0; y < b.num_objects; ++y) {
      auto dom = b.hom(adj.left.obj[x], y);
      auto cod = a.hom(x, adj.right.obj[y]);
      std::map<Id, Id> fwd;
      std::map<Id, int> hit;
      for (auto [h, ph] : adj.phi[x][y]) {
        fwd[h] = ph;
        hit[ph]++;
      }
      bool bij = fwd.size() == dom.size() && fwd.size() == cod.size();
      for (Id h : dom)
        if (!fwd.count(h)) bij = false;
      for (Id g : cod)
        if (hit[g] != 1) bij = false;
      if (!bij) rep.add("adjunction-bijection", "phi is not a bijection", {x, y});
      phi[x][y] = std::move(fwd);
    }
  }

  if (!rep.ok()) return rep;  // naturality needs the bijections in place

  for (Id x = 0; x < a.num_objects; ++x)
    for (Id y = 0; y < b.num_objects; ++y)
      for (auto [h, ph] : phi[x][y]) {
        // naturality in X: u : X' -> X gives phi(h ∘ Lu) = phi(h) ∘ u
        for (Id x2 = 0; x2 < a.num_objects; ++x2)
          for (Id u : a.hom(x2, x)) {
            Id lhs_arg = b.compose(h, adj.left.mor[u]);
            Id lhs = phi[x2][y].at(lhs_arg);
            Id rhs = a.compose(ph, u);
            if (lhs != rhs) rep.add("adjunction-natural-src", "phi not natural in source", {x, y, h, u});
          }
        // naturality in Y: v : Y -> Y' gives phi(v ∘ h) = Rv ∘ phi(h)
        for (Id y2 = 0; y2 < b.num_objects; ++y2)
          for (Id v : b.hom(y, y2)) {
            Id lhs = phi[x][y2].at(b.compose(v, h));
            Id rhs = a.compose(adj.right.mor[v], ph);
            if (lhs != rhs) rep.add("adjunction-natural-tgt", "phi not natural in target", {x, y, h, v});
          }
      }

  for (Id f = 0; f < a.num_morphisms(); ++f)
    if (m.c(f) && !m2.c(adj.left.mor[f]))
      rep.add("quillen-left", "L does not preserve cofibrations", {f});
  for (Id f = 0; f < b.num_morphisms(); ++f)
    if (m2.f_(f) && !m.f_(adj.right.mor[f]))
      rep.add("quillen-right", "R does not preserve fibrations", {f});
  return rep;
}

}  // namespace hforge::model
