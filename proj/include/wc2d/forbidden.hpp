#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>

#include "wc2d/bitvec.hpp"
#include "wc2d/enumcode.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

// Words of length ell whose weight falls outside `band`, with a lexicographic
// one-to-one map Psi into {0,1}^target_bits. Ranks are computed arithmetically
// from binomial tallies rather than from a lookup table, so ell in the
// hundreds is fine.
class ForbiddenSpace {
public:
    ForbiddenSpace(std::int64_t ell, WeightBand band, std::int64_t target_bits);

    std::int64_t ell() const { return ell_; }
    const WeightBand& band() const { return band_; }
    std::int64_t target_bits() const { return target_bits_; }
    const mpz_class& cardinality() const { return card_; }
    bool feasible() const { return feasible_; }

    bool is_forbidden(const BitVector& w) const {
        return !band_.contains(w.weight());
    }

    // Rank of y among the forbidden words (lexicographic, 0 < 1), rendered in
    // target_bits bits; and its inverse.
    BitVector psi_rank(const BitVector& y) const;
    BitVector psi_unrank(const BitVector& bits) const;

    mpz_class rank_value(const BitVector& y) const;
    BitVector unrank_value(const mpz_class& index) const;

private:
    std::int64_t ell_;
    WeightBand band_;
    std::int64_t target_bits_;
    mpz_class card_;
    bool feasible_;
};

// Number of length-n words with weight inside band.
mpz_class band_count(std::int64_t n, const WeightBand& band);

// Smallest start index whose stride-spaced ell-bit subsequence of x falls
// outside band, or nullopt. stride 1 reads consecutive windows; stride n reads
// column windows of an n-wide row-major layout.
std::optional<std::size_t> scan_violation(const BitVector& x, std::int64_t ell,
                                          const WeightBand& band, std::size_t stride);

} // namespace wc2d
