#pragma once

#include "hforge/pi.hpp"
#include "hforge/sset.hpp"

namespace hforge::sset {

struct FibreSequenceWitness {
  PointedSSet fibre, total, base;
  SimplicialMap q;  // fibre -> total
  SimplicialMap p;  // total -> base
};

// Horn-lifting form of the fibration condition for a map p : E -> B,
// checked for all horns within the truncation.
ValidationReport check_fibration(const SimplicialMap& p, const TruncatedSSet& e,
                                 const TruncatedSSet& b);

// The three conditions: p a fibration and levelwise surjective, q levelwise
// injective, and q(F_n) equal to the fibre of p over the degenerate
// basepoint at every level.
ValidationReport check_fibre_sequence(const FibreSequenceWitness& w);

FibreSequenceWitness product_fibre_sequence(const PointedSSet& f, const PointedSSet& b);

enum class SlotStatus { exact, failed, inconclusive };

struct LesSlot {
  int n = 0;
  std::string at;  // "F", "E" or "B"
  SlotStatus status = SlotStatus::inconclusive;
  std::string note;
};

struct LesReport {
  std::vector<LesSlot> slots;
  // boundary maps: boundary[n] maps classes of pi_{n+1}(B) to classes of
  // pi_n(F); missing levels are absent
  std::map<int, std::vector<int>> boundary;
  bool all_exact() const {
    for (const auto& s : slots)
      if (s.status == SlotStatus::failed) return false;
    return true;
  }
  bool any_failed() const { return !all_exact(); }
};

// Computes homotopy groups of F, E, B as far as the truncation allows, the
// induced maps, the boundary maps by lifting representatives, and checks
// image = kernel at every slot with index <= up_to.
LesReport les_check(const FibreSequenceWitness& w, int up_to);

}  // namespace hforge::sset
