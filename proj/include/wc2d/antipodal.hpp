#pragma once

#include <cstddef>
#include <vector>

#include "wc2d/bitvec.hpp"

namespace wc2d {

// Bracket decomposition of a word: 1s open, 0s close, each 0 matched with the
// nearest preceding unmatched 1. The unmatched positions always read as a
// block of zeros followed by a block of ones.
struct BracketMatching {
    std::size_t length = 0;
    std::vector<std::pair<std::size_t, std::size_t>> matched_pairs; // (one, zero), one < zero
    std::vector<std::size_t> unmatched_zeros; // ascending
    std::vector<std::size_t> unmatched_ones;  // ascending

    static BracketMatching analyze(const BitVector& x);
};

// Involution on {0,1}^L with weight(phi(x)) = L - weight(x); for weight(x) > L/2
// the ones of phi(x) are a subset of the ones of x. Realized by reversing the
// number of ones among the unmatched (free) positions of the bracket
// decomposition; half-weight words are fixed points.
BitVector antipodal_map(const BitVector& x);

} // namespace wc2d
