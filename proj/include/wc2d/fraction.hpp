#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wc2d {

// Exact nonnegative rational. Parameters p and epsilon are always carried
// as fractions so that weight thresholds are computed without rounding error.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0 || n < 0) throw std::invalid_argument("Fraction: need num >= 0, den > 0");
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // floor(k * num / den)
    std::int64_t floor_mul(std::int64_t k) const {
        return static_cast<std::int64_t>(static_cast<__int128>(k) * num / den);
    }
    // ceil(k * num / den)
    std::int64_t ceil_mul(std::int64_t k) const {
        const __int128 p = static_cast<__int128>(k) * num;
        return static_cast<std::int64_t>((p + den - 1) / den);
    }
    // w <= k * num/den ?
    bool weight_within(std::int64_t w, std::int64_t k) const {
        return static_cast<__int128>(w) * den <= static_cast<__int128>(k) * num;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Fraction&) const = default;
    bool operator<(const Fraction& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Fraction& o) const { return !(o < *this); }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return !(*this < o); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Closed integer weight interval [lo, hi]; empty when lo > hi.
struct WeightBand {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool contains(std::int64_t w) const { return lo <= w && w <= hi; }
    bool empty() const { return lo > hi; }
    std::int64_t width() const { return hi - lo; }
};

// Integer weights admitted by the epsilon-balanced condition on length m:
// [(1/2-eps)m, (1/2+eps)m] intersected with the integers.
inline WeightBand balanced_band(std::int64_t m, const Fraction& eps) {
    // (1/2 - eps) = (den - 2 num) / (2 den); negative lower edges clamp to 0.
    const __int128 d2 = 2 * static_cast<__int128>(eps.den);
    const __int128 lo_num = static_cast<__int128>(m) * (eps.den - 2 * eps.num);
    const __int128 hi_num = static_cast<__int128>(m) * (eps.den + 2 * eps.num);
    std::int64_t lo = lo_num <= 0 ? 0 : static_cast<std::int64_t>((lo_num + d2 - 1) / d2);
    std::int64_t hi = static_cast<std::int64_t>(hi_num / d2);
    if (hi > m) hi = m;
    return {lo, hi};
}

// Integer weights admitted by the p-bounded condition on length m: [0, floor(pm)].
inline WeightBand bounded_band(std::int64_t m, const Fraction& p) {
    std::int64_t hi = p.floor_mul(m);
    if (hi > m) hi = m;
    return {0, hi};
}

} // namespace wc2d
