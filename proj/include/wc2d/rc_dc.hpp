#pragma once

#include <cstdint>
#include <vector>

#include "wc2d/balance.hpp"
#include "wc2d/bitarray.hpp"
#include "wc2d/bitvec.hpp"
#include "wc2d/enumcode.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

// One prefix swap of the halving recursion: block `index` at `depth` used
// swap index t (stored either raw or as an ordinal into a balancing set).
struct SwapEntry {
    std::int64_t depth = 0;
    std::int64_t index = 0;
    std::int64_t t = 0;
};

struct SwapTrace {
    std::vector<SwapEntry> entries; // breadth-first, left to right
};

// Row/column p-bounded codec for p < 1/2: enumerative rows, halving prefix
// swaps to bound the columns, and a sparse c x n block storing the swap trace.
class DcBoundedCodec {
public:
    DcBoundedCodec(std::int64_t n, const Fraction& p);

    std::int64_t n() const { return n_; }
    std::int64_t redundant_rows() const { return c_; }
    std::int64_t message_bits() const { return message_bits_; }
    std::int64_t redundancy() const { return n_ * n_ - message_bits_; }
    std::int64_t trace_bits() const { return trace_bits_; }
    const BoundedWeightSpace& row_space() const { return space_; }

    BitArray encode(const BitVector& msg) const;
    BitVector decode(const BitArray& a) const;

    // Sparse layout of the serialized trace into a c x n block whose rows and
    // columns stay p-bounded: row i holds every c-th trace bit starting at
    // bit i, parked at offset (i mod P) inside consecutive P-wide cells.
    BitArray pack_trace(const BitVector& trace) const;
    BitVector unpack_trace(const BitArray& block) const;

private:
    BitVector serialize_trace(const SwapTrace& trace) const;
    SwapTrace deserialize_trace(const BitVector& bits) const;

    std::int64_t n_;
    Fraction p_;
    std::int64_t c_;
    std::int64_t period_;
    BoundedWeightSpace space_;
    std::int64_t levels_;
    std::int64_t message_bits_;
    std::vector<std::int64_t> caps_;      // caps_[d]: weight cap per depth-d block
    std::vector<std::int64_t> idx_bits_;  // stored index width per depth
    std::int64_t trace_bits_;
};

// Row/column eps-balanced codec: eps-balanced rows, halving prefix swaps with
// indices drawn from the eps-balancing sets, and a 2c x n complement-pair
// block storing the swap ordinals.
class DcBalancedCodec {
public:
    DcBalancedCodec(std::int64_t n, const Fraction& eps);

    std::int64_t n() const { return n_; }
    std::int64_t suffix_bits() const { return c_; } // the paper-facing constant c
    std::int64_t message_bits() const { return message_bits_; }
    std::int64_t redundancy() const { return n_ * n_ - message_bits_; }
    std::int64_t trace_bits() const { return trace_bits_; }

    BitArray encode(const BitVector& msg) const;
    BitVector decode(const BitArray& a) const;

    BitArray pack_trace(const BitVector& trace) const;
    BitVector unpack_trace(const BitArray& block) const;

private:
    std::int64_t n_;
    Fraction eps_;
    std::int64_t c_;
    EpsRowCodec row_codec_;
    std::int64_t levels_;
    std::int64_t message_bits_;
    std::vector<EpsBalancingSet> sets_; // per depth
    std::int64_t trace_bits_;
};

} // namespace wc2d
