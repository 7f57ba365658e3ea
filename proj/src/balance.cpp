#include "wc2d/balance.hpp"

#include <algorithm>
#include <stdexcept>

namespace wc2d {

EpsBalancingSet EpsBalancingSet::make(std::int64_t n, const Fraction& eps) {
    if (eps.floor_mul(n) < 1)
        throw std::invalid_argument("EpsBalancingSet: need eps*n >= 1");
    EpsBalancingSet s;
    s.n = n;
    s.eps = eps;
    const std::int64_t step = 2 * eps.floor_mul(n);
    s.indices.push_back(0);
    for (std::int64_t t = step; t < n; t += step) s.indices.push_back(t);
    s.indices.push_back(n);
    return s;
}

std::int64_t balancing_index(const BitVector& x) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    if (n % 2 != 0) throw std::invalid_argument("balancing_index: length must be even");
    // weight(flip_prefix(x,t)) = weight(x) + t - 2*prefix_weight(t); walk t upward.
    std::int64_t w = x.weight();
    std::int64_t pre = 0;
    for (std::int64_t t = 0; t <= n; ++t) {
        if (t > 0) pre += x.get(static_cast<std::size_t>(t - 1));
        if (w + t - 2 * pre == n / 2) return t;
    }
    throw std::logic_error("balancing_index: no index found"); // unreachable for even n
}

std::int64_t eps_balancing_index(const BitVector& x, const Fraction& eps) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const EpsBalancingSet s = EpsBalancingSet::make(n, eps);
    const WeightBand band = balanced_band(n, eps);
    const std::int64_t w = x.weight();
    for (std::int64_t t : s.indices) {
        if (band.contains(w + t - 2 * x.prefix_weight(static_cast<std::size_t>(t)))) return t;
    }
    throw std::logic_error("eps_balancing_index: no index in set");
}

EpsRowCodec EpsRowCodec::make(std::int64_t n, const Fraction& eps) {
    if (n % 2 != 0) throw std::invalid_argument("EpsRowCodec: n must be even");
    const std::int64_t half_inv = Fraction(eps.den, 2 * eps.num).floor_mul(1); // floor(1/(2eps))
    std::int64_t half_c = 0;
    while ((std::int64_t{1} << half_c) < half_inv + 1) ++half_c;
    EpsRowCodec rc;
    rc.n = n;
    rc.eps = eps;
    rc.c = 2 * half_c;
    if (eps.floor_mul(n) < 2)
        throw std::invalid_argument("EpsRowCodec: need eps*n >= 2");
    if (n - rc.c < 2 || eps.floor_mul(n - rc.c) < 1)
        throw std::invalid_argument("EpsRowCodec: row too short for suffix");
    rc.set = EpsBalancingSet::make(n - rc.c, eps);
    if (rc.set.size() > (std::size_t{1} << half_c))
        throw std::invalid_argument("EpsRowCodec: balancing set does not fit suffix ordinal");
    return rc;
}

BitVector EpsRowCodec::encode(const BitVector& msg) const {
    const std::int64_t k = n - c;
    if (static_cast<std::int64_t>(msg.size()) != k)
        throw std::invalid_argument("EpsRowCodec::encode: message size mismatch");
    // Pick the in-set index whose flipped-part weight is closest to k/2;
    // the suffix contributes exactly c/2 ones, so the row lands in band.
    const std::int64_t w = msg.weight();
    std::int64_t best_t = 0;
    std::int64_t best_d = -1;
    for (std::int64_t t : set.indices) {
        const std::int64_t wf = w + t - 2 * msg.prefix_weight(static_cast<std::size_t>(t));
        const std::int64_t d = wf >= k - wf ? 2 * wf - k : k - 2 * wf; // |2wf - k|
        if (best_d < 0 || d < best_d) { best_d = d; best_t = t; }
    }
    BitVector row = msg.flip_prefix(static_cast<std::size_t>(best_t));
    const std::size_t ord =
        std::lower_bound(set.indices.begin(), set.indices.end(), best_t) - set.indices.begin();
    const BitVector u = uint_to_bits(ord, static_cast<unsigned>(c / 2));
    for (std::int64_t i = 0; i < c / 2; ++i) {
        row.push_back(u.get(static_cast<std::size_t>(i)));
        row.push_back(!u.get(static_cast<std::size_t>(i)));
    }
    return row;
}

BitVector EpsRowCodec::decode(const BitVector& row) const {
    if (static_cast<std::int64_t>(row.size()) != n)
        throw std::invalid_argument("EpsRowCodec::decode: row size mismatch");
    BitVector u(static_cast<std::size_t>(c / 2));
    for (std::int64_t i = 0; i < c / 2; ++i)
        u.set(static_cast<std::size_t>(i), row.get(static_cast<std::size_t>(n - c + 2 * i)));
    const std::uint64_t ord = bits_to_uint(u, 0, static_cast<unsigned>(c / 2));
    if (ord >= set.indices.size())
        throw std::invalid_argument("EpsRowCodec::decode: suffix ordinal out of range");
    const std::int64_t t = set.indices[ord];
    return row.slice(0, static_cast<std::size_t>(n - c)).flip_prefix(static_cast<std::size_t>(t));
}

std::optional<std::int64_t> swap_index_capped(const BitVector& y, const BitVector& z,
                                              std::int64_t cap) {
    if (y.size() != z.size()) throw std::invalid_argument("swap_index_capped: length mismatch");
    const std::int64_t m = static_cast<std::int64_t>(y.size());
    // f(t) = wt(z[0,t)) + wt(y[t,m)); the companion output has weight total - f(t).
    const std::int64_t total = y.weight() + z.weight();
    std::int64_t f = y.weight();
    for (std::int64_t t = 0; t <= m; ++t) {
        if (t > 0) {
            f -= y.get(static_cast<std::size_t>(t - 1));
            f += z.get(static_cast<std::size_t>(t - 1));
        }
        if (f <= cap && total - f <= cap) return t;
    }
    return std::nullopt;
}

std::int64_t swap_index_bounded(const BitVector& y, const BitVector& z, const Fraction& p) {
    const std::int64_t m = static_cast<std::int64_t>(y.size());
    const std::int64_t cap = p.floor_mul(m);
    if (y.weight() + z.weight() > 2 * cap)
        throw std::invalid_argument("swap_index_bounded: total weight exceeds 2*floor(p*m)");
    const auto t = swap_index_capped(y, z, cap);
    if (!t) throw std::logic_error("swap_index_bounded: no index despite precondition");
    return *t;
}

std::optional<std::int64_t> swap_index_in_set(const BitVector& y, const BitVector& z,
                                              const std::vector<std::int64_t>& set,
                                              const WeightBand& band) {
    if (y.size() != z.size()) throw std::invalid_argument("swap_index_in_set: length mismatch");
    const std::int64_t total = y.weight() + z.weight();
    for (std::int64_t t : set) {
        const std::int64_t f = z.prefix_weight(static_cast<std::size_t>(t)) + y.weight() -
                               y.prefix_weight(static_cast<std::size_t>(t));
        if (band.contains(f) && band.contains(total - f)) return t;
    }
    return std::nullopt;
}

bool swap_eps_precondition(std::int64_t m, const Fraction& eps, std::int64_t total_weight) {
    const WeightBand band = balanced_band(m, eps);
    const std::int64_t lo = std::max(band.lo, total_weight - band.hi);
    const std::int64_t hi = std::min(band.hi, total_weight - band.lo);
    return hi - lo + 1 >= 2 * eps.floor_mul(m);
}

std::int64_t swap_index_eps(const BitVector& y, const BitVector& z, const Fraction& eps) {
    const std::int64_t m = static_cast<std::int64_t>(y.size());
    if (!swap_eps_precondition(m, eps, y.weight() + z.weight()))
        throw std::invalid_argument("swap_index_eps: precondition violated");
    const EpsBalancingSet s = EpsBalancingSet::make(m, eps);
    const auto t = swap_index_in_set(y, z, s.indices, balanced_band(m, eps));
    if (!t) throw std::logic_error("swap_index_eps: no index despite precondition");
    return *t;
}

} // namespace wc2d
