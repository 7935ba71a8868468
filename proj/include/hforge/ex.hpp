#pragma once

#include "hforge/sset.hpp"

namespace hforge::sset {

struct ExResult {
  TruncatedSSet space;
  SimplicialMap natural;  // X -> Ex(X), by the last-vertex map
};

// One application of the subdivision-dual endofunctor: level n consists of
// the simplicial maps sd Δ[n] -> X, with faces and degeneracies given by
// precomposition with sd of the coface and codegeneracy maps. Throws
// BoundError with a size report when the enumeration exceeds the budget.
ExResult ex_once(const TruncatedSSet& x, std::size_t budget = 500000);

// k iterations; the natural map is the composite of the one-step maps.
ExResult ex_iterated(const TruncatedSSet& x, int k, std::size_t budget = 500000);

}  // namespace hforge::sset
