#pragma once

#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "hforge/fincat.hpp"

namespace hforge::sset {

using cat::FinCategory;
using cat::Id;
using cat::kNone;
using hforge::ValidationReport;

// A simplicial set truncated at level N: levels X_0..X_N with face tables
// δ_i : X_n -> X_{n-1} and degeneracy tables σ_i : X_n -> X_{n+1}.
struct TruncatedSSet {
  std::string name;
  int truncation = 0;
  std::vector<Id> level_size;                       // N+1 entries
  std::vector<std::vector<std::vector<Id>>> face;   // face[n][i], 1 <= n <= N
  std::vector<std::vector<std::vector<Id>>> degen;  // degen[n][i], 0 <= n < N

  Id size(int n) const { return level_size[n]; }
  Id d(int n, int i, Id x) const { return face[n][i][x]; }
  Id s(int n, int i, Id x) const { return degen[n][i][x]; }
  // Iterated degeneracy of a vertex, landing at the given level.
  Id degenerate_vertex(Id v, int level) const;
  bool is_degenerate(int n, Id x) const;  // x = σ_i y for some i, y
};

struct PointedSSet {
  TruncatedSSet space;
  Id basepoint = 0;
};

struct SimplicialMap {
  std::vector<std::vector<Id>> level;  // level[n] : X_n -> Y_n
};

void check_wellformed(const TruncatedSSet& x);
ValidationReport validate_sset(const TruncatedSSet& x);
ValidationReport validate_simplicial_map(const SimplicialMap& f, const TruncatedSSet& x,
                                         const TruncatedSSet& y);

TruncatedSSet terminal_sset(int truncation);
TruncatedSSet discrete_sset(int truncation, Id points);
TruncatedSSet nerve(const FinCategory& c, int truncation);
TruncatedSSet product(const TruncatedSSet& x, const TruncatedSSet& y);
SimplicialMap projection_first(const TruncatedSSet& x, const TruncatedSSet& y);
SimplicialMap projection_second(const TruncatedSSet& x, const TruncatedSSet& y);
// z -> (z, degenerate basepoint of y)
SimplicialMap include_first(const TruncatedSSet& x, const TruncatedSSet& y, Id y_base);

TruncatedSSet truncate(const TruncatedSSet& x, int level);
SimplicialMap identity_map(const TruncatedSSet& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Functorial action of a monotone map phi : [k] -> [n] on a level-n simplex.
Id apply_monotone(const TruncatedSSet& x, const std::vector<int>& phi, int n, Id simplex);

// Nerve simplex <-> chain-of-morphisms lookup (level >= 1).
std::vector<Id> nerve_chain(const FinCategory& c, int truncation, int n, Id simplex);
Id nerve_simplex_of_chain(const FinCategory& c, int truncation, const std::vector<Id>& chain);

// Incremental construction from nondegenerate data. Add all nondegenerate
// simplices of level n (faces refer to any already-built level n-1 ids)
// before starting level n+1; degenerate simplices are generated on the fly.
class SSetBuilder {
 public:
  explicit SSetBuilder(int truncation);
  Id add_vertex();
  Id add_simplex(int n, const std::vector<Id>& faces);
  Id degenerate(int n, int i, Id x);  // id of σ_i x, generating levels as needed
  TruncatedSSet build();

 private:
  void ensure_level(int n);
  TruncatedSSet x_;
  int filled_ = 0;  // levels [0, filled_] have complete face/degeneracy rows
  // normal form of every simplex: nondegenerate core + surjection word
  struct Normal {
    int core_level;
    Id core;
    std::vector<int> surj;  // monotone surjection [n] -> [core_level]
    bool operator<(const Normal& o) const {
      return std::tie(core_level, core, surj) < std::tie(o.core_level, o.core, o.surj);
    }
  };
  std::vector<std::vector<Normal>> normal_;          // per level per simplex
  std::vector<std::map<Normal, Id>> normal_index_;   // per level
  std::vector<std::vector<std::vector<Id>>> nd_faces_;  // input faces per level per nondegenerate
  std::vector<std::vector<Id>> nd_ids_;              // nondegenerate simplex ids per level
};

// Λ^m_k horns: faces at level m-1 indexed by [m] \ {k}, fillers at level m.
struct Horn {
  int m = 0;
  int k = 0;
  std::vector<Id> faces;  // m entries: indices 0..m skipping k, in order
};

struct HornReport {
  std::vector<Horn> unfilled;
  std::size_t horns_checked = 0;
  bool kan() const { return unfilled.empty(); }
};

// Checks every horn with faces at levels 0..up_to (fillers one level up).
HornReport is_kan(const TruncatedSSet& x, int up_to);

// Compatibility check plus exhaustive filler search, smallest id first.
std::optional<Id> horn_fill(const TruncatedSSet& x, const Horn& horn);

// Face-indexed lookup used by horn search and the fibration checks.
class FaceIndex {
 public:
  explicit FaceIndex(const TruncatedSSet& x);
  const std::vector<Id>& with_face(int n, int i, Id value) const;

 private:
  // per level n, per face index i, value -> simplices
  std::vector<std::vector<std::map<Id, std::vector<Id>>>> idx_;
  std::vector<Id> empty_;
};

// All compatible Λ^m_k horn face tuples of x, via backtracking on the
// matching conditions.
void for_each_horn(const TruncatedSSet& x, const FaceIndex& index, int m, int k,
                   const std::function<void(const std::vector<Id>&)>& fn);

}  // namespace hforge::sset
