#pragma once

#include <optional>
#include <vector>

#include "pbci/algebra.hpp"

namespace pbci {

// map[x] is the image in b of element x of a.
using ElementMap = std::vector<Element>;

// Unit-preserving bijection commuting with both arrows, or nullopt. The
// search is exhaustive: backtracking with the unit fixed, candidates pruned by
// the (down-set size, up-set size, integral) profile of each element.
std::optional<ElementMap> find_isomorphism(const Algebra& a, const Algebra& b);

// Injective homomorphism a -> b, or nullopt. Exhaustive.
std::optional<ElementMap> find_embedding(const Algebra& a, const Algebra& b);

inline bool are_isomorphic(const Algebra& a, const Algebra& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace pbci
