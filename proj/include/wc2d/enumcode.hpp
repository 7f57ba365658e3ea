#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "wc2d/bitvec.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

// Exact count bookkeeping for lexicographic walks over weight-constrained
// words: S = number of rem-bit words with weight <= b, C = binom(rem, b).
// Both are updated in O(1) big-integer operations when a position is consumed.
struct SuffixCounter {
    std::int64_t rem = 0;
    std::int64_t b = 0;
    mpz_class S;
    mpz_class C;

    void init(std::int64_t rem0, std::int64_t b0);
    void consume0(); // next position carries 0: rem-1, same budget
    void consume1(); // next position carries 1: rem-1, budget-1
};

// MSB-first renderings between bit fields and big integers.
mpz_class bits_to_mpz(const BitVector& v);
BitVector mpz_to_bits(const mpz_class& value, std::size_t width);

// The p-bounded word set S(n, p) = { x in {0,1}^n : weight(x) <= p n } with a
// lexicographic ranking (0 < 1). Payloads are floor(log2 |S|) bits per word.
class BoundedWeightSpace {
public:
    BoundedWeightSpace(std::int64_t n, const Fraction& p);

    std::int64_t length() const { return n_; }
    std::int64_t max_weight() const { return wmax_; }
    const mpz_class& cardinality() const { return card_; }
    std::int64_t payload_bits() const { return payload_bits_; }
    const Fraction& p() const { return p_; }

    mpz_class rank(const BitVector& x) const;
    BitVector unrank(const mpz_class& index) const;

    BitVector payload_encode(const BitVector& msg) const;
    BitVector payload_decode(const BitVector& x) const;

private:
    std::int64_t n_;
    Fraction p_;
    std::int64_t wmax_;
    mpz_class card_;
    std::int64_t payload_bits_;
};

mpz_class bounded_cardinality(std::int64_t n, const Fraction& p);

} // namespace wc2d
