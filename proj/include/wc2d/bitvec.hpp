#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wc2d {

// Packed bit sequence. Index 0 is the first (leftmost) bit; when a vector is
// rendered as an integer the leftmost bit is the most significant.
// Values are immutable by convention once published; codecs build new vectors
// through the functional operations below or through local mutation before
// handing them out.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n, bool fill = false)
        : len_(n), w_((n + 63) / 64, fill ? ~0ull : 0ull) {
        mask_tail();
    }

    static BitVector from_string(std::string_view s);
    std::string to_string() const;

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        assert(i < len_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        assert(i < len_);
        const std::uint64_t m = 1ull << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void push_back(bool v) {
        if ((len_ & 63) == 0) w_.push_back(0);
        len_++;
        if (v) set(len_ - 1, true);
    }

    std::int64_t weight() const;
    std::int64_t prefix_weight(std::size_t t) const; // ones among the first t bits

    BitVector complement() const;
    BitVector flip_prefix(std::size_t t) const;

    // (Swap_t(y,z), Swap_t(z,y)): exchange the first t bits of y and z.
    static std::pair<BitVector, BitVector> swap_prefix(const BitVector& y, const BitVector& z,
                                                       std::size_t t);

    BitVector slice(std::size_t pos, std::size_t n) const;
    BitVector concat(const BitVector& other) const;
    void append(const BitVector& other);

    // Gather count bits at pos, pos+stride, pos+2*stride, ...
    BitVector gather(std::size_t pos, std::size_t stride, std::size_t count) const;

    // Splices used by the replacement codecs. Each returns a fresh vector.
    BitVector erase(std::size_t pos, std::size_t n) const;
    BitVector insert(std::size_t pos, const BitVector& bits) const;
    // Remove the bits at pos, pos+stride, ..., pos+(count-1)*stride.
    BitVector erase_strided(std::size_t pos, std::size_t stride, std::size_t count) const;
    // Inverse of erase_strided: the result r satisfies r[pos + k*stride] = bits[k]
    // with the current bits filling the remaining positions in order.
    BitVector insert_strided(std::size_t pos, std::size_t stride, const BitVector& bits) const;

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

    // Up to 64 bits starting at pos (low bit of the result = bit at pos).
    std::uint64_t read_word(std::size_t pos, unsigned nbits) const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void mask_tail() {
        if (len_ & 63) w_.back() &= (~0ull) >> (64 - (len_ & 63));
    }
    static void copy_bits(BitVector& dst, std::size_t dpos, const BitVector& src,
                          std::size_t spos, std::size_t n);

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

// MSB-first integer rendering of a bit field, and its inverse.
std::uint64_t bits_to_uint(const BitVector& v, std::size_t pos, unsigned width);
BitVector uint_to_bits(std::uint64_t value, unsigned width);

} // namespace wc2d
