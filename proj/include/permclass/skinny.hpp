#pragma once

#include "permclass/ratfun.hpp"

#include <vector>

namespace permclass {

// Generating function of the skinny grid class Grid(V) for a ±1 vector V, empty permutation excluded.
// Reduced to lowest terms. Practical up to |V| = 6.
RationalFunction skinny_gf(const std::vector<int>& V);
// The bivariate H_V(x, y) of the tightly gridded permutations, as numerator / factored denominator.
RationalFunction skinny_h(const std::vector<int>& V);
// The closed form proposed for Grid(1, ..., 1) with k ones.
RationalFunction skinny_ones_conjecture(int k);

}  // namespace permclass
