#pragma once

#include <cstdint>
#include <vector>

#include "wc2d/bitarray.hpp"
#include "wc2d/bitvec.hpp"
#include "wc2d/fraction.hpp"
#include "wc2d/window1d.hpp"

namespace wc2d {

// Subarray p-bounded codec for p >= 1/2 (targets the half-weight family,
// which is contained in every p >= 1/2 family). Overweight m x m subarrays
// (and, in the band touching the flag row, their top (m-1) x m parts) are
// swapped with antipodal partners; the last row records the flags as
// bit/complement pairs followed by zero fill. Redundancy is n bits.
class SubBoundedCodec {
public:
    SubBoundedCodec(std::int64_t n, std::int64_t m, const Fraction& p);

    std::int64_t n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t k() const { return k_; }
    std::int64_t message_bits() const { return n_ * n_ - n_; }
    std::int64_t redundancy() const { return n_; }

    BitArray encode(const BitVector& msg) const;
    BitVector decode(const BitArray& a) const;

    // Flag values of the last encode pass in subarray order (for inspection).
    struct Pass {
        BitArray array;
        std::vector<bool> flags;
        std::vector<std::int64_t> weights_before;
        std::vector<std::int64_t> weights_after;
    };
    Pass encode_traced(const BitVector& msg) const;

private:
    std::int64_t n_, m_, k_;
    Fraction p_;
};

// Subarray eps-balanced codec: the n^2-bit frame goes through the window
// codec with window length m, so every m consecutive bits of every row (in
// fact of the whole frame) are eps-balanced and every m x m subarray follows.
// Redundancy is 1 bit.
class SubBalancedCodec {
public:
    SubBalancedCodec(std::int64_t n, std::int64_t m, const Fraction& eps);

    std::int64_t n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t message_bits() const { return n_ * n_ - 1; }
    std::int64_t redundancy() const { return 1; }
    const Window1dCodec& sequence_codec() const { return seq_; }

    BitArray encode(const BitVector& msg) const;
    BitVector decode(const BitArray& a) const;

private:
    std::int64_t n_, m_;
    Fraction eps_;
    Window1dCodec seq_;
};

} // namespace wc2d
