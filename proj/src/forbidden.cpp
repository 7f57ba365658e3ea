#include "wc2d/forbidden.hpp"

#include <stdexcept>

namespace wc2d {

mpz_class band_count(std::int64_t n, const WeightBand& band) {
    if (band.empty()) return 0;
    SuffixCounter hi, lo;
    hi.init(n, band.hi);
    lo.init(n, band.lo - 1);
    return hi.S - lo.S;
}

ForbiddenSpace::ForbiddenSpace(std::int64_t ell, WeightBand band, std::int64_t target_bits)
    : ell_(ell), band_(band), target_bits_(target_bits) {
    if (ell <= 0) throw std::invalid_argument("ForbiddenSpace: ell must be positive");
    card_ = (mpz_class(1) << static_cast<unsigned long>(ell)) - band_count(ell, band);
    feasible_ = target_bits >= 0 &&
                card_ <= (mpz_class(1) << static_cast<unsigned long>(target_bits));
}

mpz_class ForbiddenSpace::rank_value(const BitVector& y) const {
    if (static_cast<std::int64_t>(y.size()) != ell_)
        throw std::invalid_argument("psi_rank: size mismatch");
    if (!is_forbidden(y)) throw std::invalid_argument("psi_rank: word is inside the band");
    // Count forbidden words lexicographically below y: at every 1 of y, the
    // words agreeing on the prefix and carrying 0 there, with out-of-band
    // completions of the remainder.
    SuffixCounter hi, lo;
    hi.init(ell_ - 1, band_.hi);
    lo.init(ell_ - 1, band_.lo - 1);
    mpz_class pow2 = mpz_class(1) << static_cast<unsigned long>(ell_ - 1);
    mpz_class r = 0;
    for (std::int64_t j = 0; j < ell_; ++j) {
        if (y.get(static_cast<std::size_t>(j))) {
            r += pow2 - (hi.S - lo.S);
            hi.consume1();
            lo.consume1();
        } else {
            hi.consume0();
            lo.consume0();
        }
        pow2 >>= 1;
    }
    return r;
}

BitVector ForbiddenSpace::unrank_value(const mpz_class& index) const {
    if (index < 0 || index >= card_) throw std::invalid_argument("psi_unrank: index out of range");
    SuffixCounter hi, lo;
    hi.init(ell_ - 1, band_.hi);
    lo.init(ell_ - 1, band_.lo - 1);
    mpz_class pow2 = mpz_class(1) << static_cast<unsigned long>(ell_ - 1);
    mpz_class idx = index;
    BitVector y(static_cast<std::size_t>(ell_));
    for (std::int64_t j = 0; j < ell_; ++j) {
        const mpz_class zero_count = pow2 - (hi.S - lo.S);
        if (idx < zero_count) {
            hi.consume0();
            lo.consume0();
        } else {
            idx -= zero_count;
            y.set(static_cast<std::size_t>(j), true);
            hi.consume1();
            lo.consume1();
        }
        pow2 >>= 1;
    }
    if (idx != 0) throw std::logic_error("psi_unrank: residual index");
    return y;
}

BitVector ForbiddenSpace::psi_rank(const BitVector& y) const {
    return mpz_to_bits(rank_value(y), static_cast<std::size_t>(target_bits_));
}

BitVector ForbiddenSpace::psi_unrank(const BitVector& bits) const {
    if (static_cast<std::int64_t>(bits.size()) != target_bits_)
        throw std::invalid_argument("psi_unrank: payload width mismatch");
    return unrank_value(bits_to_mpz(bits));
}

std::optional<std::size_t> scan_violation(const BitVector& x, std::int64_t ell,
                                          const WeightBand& band, std::size_t stride) {
    const std::size_t n = x.size();
    const std::size_t span = static_cast<std::size_t>(ell - 1) * stride;
    if (ell <= 0 || n < span + 1) return std::nullopt;
    std::optional<std::size_t> best;
    const std::size_t len = static_cast<std::size_t>(ell);
    // Windows within one residue class slide by one sample; classes interleave
    // start positions, so track the global minimum over the per-class firsts.
    for (std::size_t r = 0; r < stride && r < n; ++r) {
        const std::size_t count = (n - r + stride - 1) / stride; // members of this class
        if (count < len) continue;
        std::int64_t w = 0;
        for (std::size_t k = 0; k < len; ++k) w += x.get(r + k * stride);
        for (std::size_t k = 0;; ++k) {
            if (!band.contains(w)) {
                const std::size_t start = r + k * stride;
                if (!best || start < *best) best = start;
                break;
            }
            if (k + len >= count) break;
            w -= x.get(r + k * stride);
            w += x.get(r + (k + len) * stride);
        }
    }
    return best;
}

} // namespace wc2d
