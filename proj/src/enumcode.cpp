#include "wc2d/enumcode.hpp"

#include <stdexcept>

namespace wc2d {

void SuffixCounter::init(std::int64_t rem0, std::int64_t b0) {
    rem = rem0;
    b = b0;
    if (b < 0) {
        S = 0;
        C = 0;
        return;
    }
    if (b >= rem) {
        S = mpz_class(1) << static_cast<unsigned long>(rem);
        C = (b == rem) ? 1 : 0;
        return;
    }
    mpz_class binom = 1; // C(rem, 0)
    S = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        binom *= (rem - i + 1);
        binom /= i;
        S += binom;
    }
    C = binom;
}

void SuffixCounter::consume0() {
    if (b < 0) { rem--; return; }
    if (b >= rem) {
        // Fully (or boundary) unconstrained: S = 2^rem.
        rem--;
        S >>= 1;
        C = 0; // b >= rem+1 > new rem
        return;
    }
    C *= (rem - b);
    C /= rem;       // C(rem-1, b)
    S += C;
    S >>= 1;        // S(rem-1, b)
    rem--;
}

void SuffixCounter::consume1() {
    if (b <= 0) {
        // Budget exhausted: no suffix qualifies from here on.
        rem--;
        b--;
        S = 0;
        C = 0;
        return;
    }
    if (b >= rem) {
        // b-1 vs rem-1 keeps the boundary relation.
        rem--;
        b--;
        S >>= 1;
        C = (b == rem) ? 1 : 0;
        return;
    }
    C *= (rem - b);
    C /= rem;       // C(rem-1, b)
    S += C;
    S >>= 1;        // S(rem-1, b)
    S -= C;         // S(rem-1, b-1)
    C *= b;
    C /= (rem - b); // C(rem-1, b-1)
    rem--;
    b--;
}

mpz_class bits_to_mpz(const BitVector& v) {
    mpz_class x = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        x <<= 1;
        if (v.get(i)) x += 1;
    }
    return x;
}

BitVector mpz_to_bits(const mpz_class& value, std::size_t width) {
    BitVector v(width);
    for (std::size_t i = 0; i < width; ++i)
        if (mpz_tstbit(value.get_mpz_t(), static_cast<mp_bitcnt_t>(width - 1 - i)))
            v.set(i, true);
    return v;
}

mpz_class bounded_cardinality(std::int64_t n, const Fraction& p) {
    SuffixCounter sc;
    sc.init(n, p.floor_mul(n));
    return sc.S;
}

BoundedWeightSpace::BoundedWeightSpace(std::int64_t n, const Fraction& p)
    : n_(n), p_(p), wmax_(p.floor_mul(n)) {
    if (n <= 0) throw std::invalid_argument("BoundedWeightSpace: n must be positive");
    card_ = bounded_cardinality(n, p);
    payload_bits_ = static_cast<std::int64_t>(mpz_sizeinbase(card_.get_mpz_t(), 2)) - 1;
}

mpz_class BoundedWeightSpace::rank(const BitVector& x) const {
    if (static_cast<std::int64_t>(x.size()) != n_)
        throw std::invalid_argument("rank: size mismatch");
    if (x.weight() > wmax_) throw std::invalid_argument("rank: word exceeds weight bound");
    SuffixCounter sc;
    sc.init(n_ - 1, wmax_);
    mpz_class r = 0;
    for (std::int64_t j = 0; j < n_; ++j) {
        if (x.get(static_cast<std::size_t>(j))) {
            r += sc.S;
            sc.consume1();
        } else {
            sc.consume0();
        }
    }
    return r;
}

BitVector BoundedWeightSpace::unrank(const mpz_class& index) const {
    if (index < 0 || index >= card_) throw std::invalid_argument("unrank: index out of range");
    SuffixCounter sc;
    sc.init(n_ - 1, wmax_);
    BitVector x(static_cast<std::size_t>(n_));
    mpz_class idx = index;
    for (std::int64_t j = 0; j < n_; ++j) {
        if (idx < sc.S) {
            sc.consume0();
        } else {
            idx -= sc.S;
            x.set(static_cast<std::size_t>(j), true);
            sc.consume1();
        }
    }
    if (idx != 0) throw std::logic_error("unrank: residual index");
    return x;
}

BitVector BoundedWeightSpace::payload_encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != payload_bits_)
        throw std::invalid_argument("payload_encode: size mismatch");
    return unrank(bits_to_mpz(msg));
}

BitVector BoundedWeightSpace::payload_decode(const BitVector& x) const {
    const mpz_class r = rank(x);
    if (mpz_sizeinbase(r.get_mpz_t(), 2) > static_cast<std::size_t>(payload_bits_) && r != 0)
        throw std::invalid_argument("payload_decode: rank outside payload range");
    return mpz_to_bits(r, static_cast<std::size_t>(payload_bits_));
}

} // namespace wc2d
