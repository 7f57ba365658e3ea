#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wc2d/bitvec.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

// Candidate prefix lengths for epsilon-balancing: {0, n} together with the
// multiples of 2*floor(eps*n) below n, sorted ascending.
struct EpsBalancingSet {
    std::int64_t n = 0;
    Fraction eps;
    std::vector<std::int64_t> indices;

    static EpsBalancingSet make(std::int64_t n, const Fraction& eps);
    std::size_t size() const { return indices.size(); }
};

// Smallest t with weight(flip_prefix(x, t)) == |x|/2. Requires |x| even.
std::int64_t balancing_index(const BitVector& x);

// Smallest t in the eps-balancing set making flip_prefix(x, t) eps-balanced.
std::int64_t eps_balancing_index(const BitVector& x, const Fraction& eps);

// Row codec: n-bit eps-balanced rows carrying n - c message bits, where
// c = 2*ceil(log2(floor(1/(2 eps)) + 1)). The flipped prefix length is drawn
// from the balancing set of the message part and its ordinal is appended as a
// c-bit interleaved suffix u1 ~u1 u2 ~u2 ..., which is itself balanced.
struct EpsRowCodec {
    std::int64_t n = 0;
    Fraction eps;
    std::int64_t c = 0; // suffix bits
    EpsBalancingSet set; // over the message part (length n - c)

    static EpsRowCodec make(std::int64_t n, const Fraction& eps);

    std::int64_t message_bits() const { return n - c; }
    BitVector encode(const BitVector& msg) const;
    BitVector decode(const BitVector& row) const;
};

// Smallest t in [0, m] such that both prefix-swap outputs have weight <= cap.
// Returns nullopt when no such t exists.
std::optional<std::int64_t> swap_index_capped(const BitVector& y, const BitVector& z,
                                              std::int64_t cap);

// Smallest t in [0, m] making both prefix-swap outputs p-bounded.
// Precondition: weight(y) + weight(z) <= 2*floor(p*m), which makes the index exist.
std::int64_t swap_index_bounded(const BitVector& y, const BitVector& z, const Fraction& p);

// Smallest t in `set` such that both prefix-swap outputs land in `band`.
std::optional<std::int64_t> swap_index_in_set(const BitVector& y, const BitVector& z,
                                              const std::vector<std::int64_t>& set,
                                              const WeightBand& band);

// Smallest t in the eps-balancing set of length m making both prefix-swap
// outputs eps-balanced. Precondition (guarantees existence): the target
// interval for the first output's weight contains at least 2*floor(eps*m)
// integers; see swap_eps_precondition.
std::int64_t swap_index_eps(const BitVector& y, const BitVector& z, const Fraction& eps);

// Exact existence condition for swap_index_eps given total weight y+z.
bool swap_eps_precondition(std::int64_t m, const Fraction& eps, std::int64_t total_weight);

} // namespace wc2d
