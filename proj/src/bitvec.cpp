#include "wc2d/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace wc2d {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '1') v.set(i, true);
        else if (c != '0') throw std::invalid_argument("BitVector::from_string: expected 0/1");
    }
    return v;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::int64_t BitVector::weight() const {
    std::int64_t w = 0;
    for (std::uint64_t x : w_) w += std::popcount(x);
    return w;
}

std::int64_t BitVector::prefix_weight(std::size_t t) const {
    assert(t <= len_);
    std::int64_t w = 0;
    std::size_t full = t >> 6;
    for (std::size_t i = 0; i < full; ++i) w += std::popcount(w_[i]);
    if (t & 63) w += std::popcount(w_[full] & ((~0ull) >> (64 - (t & 63))));
    return w;
}

std::uint64_t BitVector::read_word(std::size_t pos, unsigned nbits) const {
    assert(nbits <= 64 && pos + nbits <= len_);
    if (nbits == 0) return 0;
    const std::size_t wi = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t x = w_[wi] >> off;
    if (off && wi + 1 < w_.size()) x |= w_[wi + 1] << (64 - off);
    if (nbits < 64) x &= (~0ull) >> (64 - nbits);
    return x;
}

void BitVector::copy_bits(BitVector& dst, std::size_t dpos, const BitVector& src,
                          std::size_t spos, std::size_t n) {
    assert(dpos + n <= dst.len_ && spos + n <= src.len_);
    while (n > 0) {
        const unsigned chunk = static_cast<unsigned>(n >= 64 ? 64 : n);
        const std::uint64_t bits = src.read_word(spos, chunk);
        const std::size_t wi = dpos >> 6;
        const unsigned off = dpos & 63;
        std::uint64_t lo_mask = chunk == 64 ? ~0ull : ((1ull << chunk) - 1);
        dst.w_[wi] = (dst.w_[wi] & ~(lo_mask << off)) | (bits << off);
        if (off && off + chunk > 64) {
            const unsigned spill = off + chunk - 64;
            const std::uint64_t hi_mask = (1ull << spill) - 1;
            dst.w_[wi + 1] = (dst.w_[wi + 1] & ~hi_mask) | (bits >> (64 - off));
        }
        dpos += chunk;
        spos += chunk;
        n -= chunk;
    }
}

BitVector BitVector::complement() const {
    BitVector r(len_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.mask_tail();
    return r;
}

BitVector BitVector::flip_prefix(std::size_t t) const {
    if (t > len_) throw std::out_of_range("flip_prefix: t out of range");
    BitVector r = *this;
    std::size_t full = t >> 6;
    for (std::size_t i = 0; i < full; ++i) r.w_[i] = ~r.w_[i];
    if (t & 63) r.w_[full] ^= (~0ull) >> (64 - (t & 63));
    r.mask_tail();
    return r;
}

std::pair<BitVector, BitVector> BitVector::swap_prefix(const BitVector& y, const BitVector& z,
                                                       std::size_t t) {
    if (y.size() != z.size()) throw std::invalid_argument("swap_prefix: length mismatch");
    if (t > y.size()) throw std::out_of_range("swap_prefix: t out of range");
    BitVector a = y, b = z;
    copy_bits(a, 0, z, 0, t);
    copy_bits(b, 0, y, 0, t);
    return {std::move(a), std::move(b)};
}

BitVector BitVector::slice(std::size_t pos, std::size_t n) const {
    if (pos + n > len_) throw std::out_of_range("slice: range out of bounds");
    BitVector r(n);
    copy_bits(r, 0, *this, pos, n);
    return r;
}

BitVector BitVector::concat(const BitVector& other) const {
    BitVector r(len_ + other.len_);
    copy_bits(r, 0, *this, 0, len_);
    copy_bits(r, len_, other, 0, other.len_);
    return r;
}

void BitVector::append(const BitVector& other) {
    const std::size_t old = len_;
    len_ += other.len_;
    w_.resize((len_ + 63) / 64, 0);
    copy_bits(*this, old, other, 0, other.len_);
}

BitVector BitVector::gather(std::size_t pos, std::size_t stride, std::size_t count) const {
    BitVector r(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t p = pos + k * stride;
        assert(p < len_);
        if (get(p)) r.set(k, true);
    }
    return r;
}

BitVector BitVector::erase(std::size_t pos, std::size_t n) const {
    if (pos + n > len_) throw std::out_of_range("erase: range out of bounds");
    BitVector r(len_ - n);
    copy_bits(r, 0, *this, 0, pos);
    copy_bits(r, pos, *this, pos + n, len_ - pos - n);
    return r;
}

BitVector BitVector::insert(std::size_t pos, const BitVector& bits) const {
    if (pos > len_) throw std::out_of_range("insert: position out of bounds");
    BitVector r(len_ + bits.len_);
    copy_bits(r, 0, *this, 0, pos);
    copy_bits(r, pos, bits, 0, bits.len_);
    copy_bits(r, pos + bits.len_, *this, pos, len_ - pos);
    return r;
}

BitVector BitVector::erase_strided(std::size_t pos, std::size_t stride, std::size_t count) const {
    assert(stride >= 1);
    if (count == 0) return *this;
    const std::size_t last = pos + (count - 1) * stride;
    if (last >= len_) throw std::out_of_range("erase_strided: range out of bounds");
    BitVector r(len_ - count);
    copy_bits(r, 0, *this, 0, pos);
    std::size_t d = pos;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t from = pos + k * stride + 1;
        const std::size_t to = (k + 1 < count) ? pos + (k + 1) * stride : len_;
        copy_bits(r, d, *this, from, to - from);
        d += to - from;
    }
    return r;
}

BitVector BitVector::insert_strided(std::size_t pos, std::size_t stride,
                                    const BitVector& bits) const {
    const std::size_t count = bits.size();
    if (count == 0) return *this;
    const std::size_t total = len_ + count;
    if (pos + (count - 1) * stride >= total)
        throw std::out_of_range("insert_strided: range out of bounds");
    BitVector r(total);
    copy_bits(r, 0, *this, 0, pos);
    std::size_t s = pos;
    for (std::size_t k = 0; k < count; ++k) {
        r.set(pos + k * stride, bits.get(k));
        const std::size_t from = pos + k * stride + 1;
        const std::size_t to = (k + 1 < count) ? pos + (k + 1) * stride : total;
        copy_bits(r, from, *this, s, to - from);
        s += to - from;
    }
    return r;
}

std::uint64_t bits_to_uint(const BitVector& v, std::size_t pos, unsigned width) {
    assert(width <= 64);
    std::uint64_t x = 0;
    for (unsigned i = 0; i < width; ++i) x = (x << 1) | (v.get(pos + i) ? 1u : 0u);
    return x;
}

BitVector uint_to_bits(std::uint64_t value, unsigned width) {
    assert(width <= 64);
    BitVector v(width);
    for (unsigned i = 0; i < width; ++i)
        if ((value >> (width - 1 - i)) & 1u) v.set(i, true);
    return v;
}

} // namespace wc2d
