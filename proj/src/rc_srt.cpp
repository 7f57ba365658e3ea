#include "wc2d/rc_srt.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wc2d/antipodal.hpp"
#include "wc2d/errors.hpp"

namespace wc2d {

namespace {

std::int64_t ceil_log2(std::int64_t n) {
    std::int64_t b = 0;
    while ((std::int64_t{1} << b) < n) ++b;
    return b;
}

// Word-granular popcount prefix for O(1) window weights while scanning rows.
struct PrefixIndex {
    std::vector<std::int32_t> pref;
    const BitVector* v = nullptr;

    void build(const BitVector& x) {
        v = &x;
        pref.assign(x.words().size() + 1, 0);
        for (std::size_t i = 0; i < x.words().size(); ++i)
            pref[i + 1] = pref[i] + static_cast<std::int32_t>(std::popcount(x.words()[i]));
    }
    // ones in [a, b)
    std::int64_t range_weight(std::size_t a, std::size_t b) const {
        const std::size_t wa = a >> 6, wb = b >> 6;
        const unsigned ra = a & 63, rb = b & 63;
        if (wa == wb) {
            const std::uint64_t mask =
                ((rb == 0 ? 0 : (~0ull >> (64 - rb)))) & ~(ra == 0 ? 0ull : (~0ull >> (64 - ra)));
            return std::popcount(v->words()[wa] & mask);
        }
        std::int64_t w = pref[wb] - pref[wa + 1];
        w += std::popcount(v->words()[wa] & (ra == 0 ? ~0ull : (~0ull << ra)));
        if (rb) w += std::popcount(v->words()[wb] & (~0ull >> (64 - rb)));
        return w;
    }
};

} // namespace

SrtBoundedCodec::SrtBoundedCodec(std::int64_t n, const Fraction& p)
    : n_(n), p_(p), seq_(n * n - n - 2, n, bounded_band(n, p)) {
    if (2 * p_.num <= p_.den) throw InfeasibleParams("srt-bounded: need p > 1/2");
    if (n_ < 3) throw InfeasibleParams("srt-bounded: need n >= 3");
    // (1/c^2) ln(n^2-n-3) <= n with c = p - 1/2
    const double c = p_.value() - 0.5;
    if (std::log(static_cast<double>(n_) * n_ - n_ - 3) > c * c * static_cast<double>(n_))
        throw InfeasibleParams("srt-bounded: (1/(p-1/2)^2) ln(n^2-n-3) <= n fails");
    if ((2 * p_.num - p_.den) * n_ <= 2 * p_.den)
        throw InfeasibleParams("srt-bounded: n > 2/(2p-1) fails");
}

BitArray SrtBoundedCodec::encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != message_bits())
        throw std::invalid_argument("srt-bounded encode: message size mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    const BitVector y = seq_.encode(msg); // n^2 - n - 2 bits, every n-window p-bounded
    BitArray a(n, n);
    for (std::size_t r = 0; r + 2 < n; ++r)
        a.set_row(r, y.slice(r * n, n));
    BitVector tail = y.slice((n - 2) * n, n - 2); // first n-2 cells of row n-2
    bool flag1 = false;
    if (!p_.weight_within(tail.weight(), n_ - 2)) {
        tail = tail.complement();
        flag1 = true;
    }
    a.set_row_prefix(n - 2, tail);
    a.set(n - 2, n - 2, flag1);

    // Overweight column prefixes of height n-1, then the flag row, then the
    // last column; each antipodal replacement only turns 1s into 0s, so it
    // never pushes another line over the bound.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const BitVector col = a.col_prefix(i, n - 1);
        if (!p_.weight_within(col.weight(), n_)) {
            a.set_col_prefix(i, antipodal_map(col));
            a.set(n - 1, i, true);
        }
    }
    {
        const BitVector row = a.row_prefix(n - 1, n - 1);
        if (!p_.weight_within(row.weight(), n_)) {
            a.set_row_prefix(n - 1, antipodal_map(row));
            a.set(n - 2, n - 1, true);
        }
    }
    {
        const BitVector col = a.col_prefix(n - 1, n - 1);
        if (!p_.weight_within(col.weight(), n_)) {
            a.set_col_prefix(n - 1, antipodal_map(col));
            a.set(n - 1, n - 1, true);
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (!p_.weight_within(a.row_weight(i), n_) || !p_.weight_within(a.col_weight(i), n_))
            throw EncodingError("srt-bounded encode: output violates the bound");
    return a;
}

BitVector SrtBoundedCodec::decode(const BitArray& in) const {
    if (static_cast<std::int64_t>(in.rows()) != n_ || static_cast<std::int64_t>(in.cols()) != n_)
        throw std::invalid_argument("srt-bounded decode: shape mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    BitArray a = in;
    if (a.get(n - 1, n - 1)) a.set_col_prefix(n - 1, antipodal_map(a.col_prefix(n - 1, n - 1)));
    if (a.get(n - 2, n - 1)) a.set_row_prefix(n - 1, antipodal_map(a.row_prefix(n - 1, n - 1)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (a.get(n - 1, i)) a.set_col_prefix(i, antipodal_map(a.col_prefix(i, n - 1)));
    BitVector tail = a.row_prefix(n - 2, n - 2);
    if (a.get(n - 2, n - 2)) tail = tail.complement();

    BitVector y;
    for (std::size_t r = 0; r + 2 < n; ++r) y.append(a.row(r));
    y.append(tail);
    return seq_.decode(y);
}

namespace {

// Divisors of n no larger than n/2, ascending.
std::vector<std::int64_t> small_divisors(std::int64_t n) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 1; d <= n / 2; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

// Window length for the balanced replacement codec: a divisor of n (so column
// tilings work out), at most n/2 (so the extension phase always has a full
// window to repeat), preferring the smallest length >= alpha ln(n^2) whose
// forbidden set packs into the record payload, else the largest packable one.
std::int64_t select_ell(std::int64_t n, const Fraction& epsp, std::optional<double> alpha) {
    const std::int64_t pos_bits = 2 * ceil_log2(n);
    const double a = alpha ? *alpha
                           : static_cast<double>(epsp.den) * epsp.den /
                                 (static_cast<double>(epsp.num) * epsp.num);
    const std::int64_t want =
        static_cast<std::int64_t>(std::ceil(a * 2.0 * std::log(static_cast<double>(n))));
    auto packs = [&](std::int64_t d) {
        const std::int64_t k = d - 3 - pos_bits;
        return k >= 0 && ForbiddenSpace(d, balanced_band(d, epsp), k).feasible();
    };
    std::int64_t fallback = 0;
    for (std::int64_t d : small_divisors(n)) {
        if (!packs(d)) continue;
        if (d >= want) return d;
        fallback = d;
    }
    if (fallback == 0)
        throw InfeasibleParams("srt-balanced: no window length <= n/2 divides n and packs "
                               "|F(ell,eps/2)| into 2^(ell-3-2log2(n))");
    return fallback;
}

} // namespace

SrtBalancedCodec::SrtBalancedCodec(std::int64_t n, const Fraction& eps,
                                   std::optional<double> alpha)
    : n_(n), eps_(eps), epsp_(eps.num, 2 * eps.den), ell_(select_ell(n, epsp_, alpha)),
      pos_bits_(2 * ceil_log2(n)), wband_(balanced_band(ell_, epsp_)),
      space_(ell_, wband_, ell_ - 3 - pos_bits_) {
    if (n_ < 2 || n_ % 2 != 0) throw InfeasibleParams("srt-balanced: n must be even");
    if (n_ * eps_.num < 2 * eps_.den) throw InfeasibleParams("srt-balanced: n*eps >= 2 fails");
    const double e = eps_.value();
    if (static_cast<double>(n_) * n_ < (8.0 / (e * e)) * std::log(static_cast<double>(n_)))
        throw InfeasibleParams("srt-balanced: n^2 >= (8/eps^2) ln n fails");
}

BitArray SrtBalancedCodec::encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != message_bits())
        throw std::invalid_argument("srt-balanced encode: message size mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t ell = static_cast<std::size_t>(ell_);
    const std::size_t rho = ell - 1; // record length
    BitVector c(1);
    c.append(msg); // 0 || msg

    PrefixIndex pidx;
    std::size_t clean_lo = 0, clean_hi = 0; // [clean_lo, clean_hi): no row-window violation
    const std::size_t floor_len = n / 2;

    auto first_row_violation = [&]() -> std::optional<std::size_t> {
        if (c.size() < ell) return std::nullopt;
        pidx.build(c);
        const std::size_t last = c.size() - ell;
        std::size_t s = 0;
        while (s <= last) {
            if (s >= clean_lo && s < clean_hi) {
                s = clean_hi;
                continue;
            }
            if (!wband_.contains(pidx.range_weight(s, s + ell))) return s;
            ++s;
        }
        return std::nullopt;
    };
    auto make_record = [&](bool row_kind, std::size_t pos, const BitVector& window) {
        BitVector rec(2);
        rec.set(0, true);
        rec.set(1, row_kind);
        rec.append(uint_to_bits(pos, static_cast<unsigned>(pos_bits_)));
        rec.append(space_.psi_rank(window));
        return rec;
    };

    std::int64_t guard = n_ * n_ + 1;
    while (c.size() > floor_len) {
        if (--guard < 0) throw EncodingError("srt-balanced encode: replacement loop guard");
        if (const auto ir = first_row_violation()) {
            const std::size_t i = *ir;
            const BitVector y = c.slice(i, ell);
            c = make_record(true, i, y).concat(c.erase(i, ell));
            clean_lo = rho;
            clean_hi = (i >= ell) ? rho + i - ell + 1 : rho;
            continue;
        }
        const auto ic = scan_violation(c, ell_, wband_, n);
        if (!ic) break;
        const std::size_t i = *ic;
        const BitVector z = c.gather(i, n, ell);
        c = make_record(false, i, z).concat(c.erase_strided(i, n, ell));
        clean_lo = rho;
        clean_hi = (i >= ell) ? rho + i - ell + 1 : rho;
    }
    if (scan_violation(c, ell_, wband_, 1) || scan_violation(c, ell_, wband_, n))
        throw EncodingError("srt-balanced encode: replacement floor reached without compliance");
    return extension_fill(c);
}

BitVector SrtBalancedCodec::decode(const BitArray& a) const {
    if (static_cast<std::int64_t>(a.rows()) != n_ || static_cast<std::int64_t>(a.cols()) != n_)
        throw std::invalid_argument("srt-balanced decode: shape mismatch");
    const std::size_t ell = static_cast<std::size_t>(ell_);
    BitVector c = a.flatten();
    std::int64_t guard = n_ * n_ + 1;
    while (c.get(0)) {
        if (--guard < 0) throw DecodingError("srt-balanced decode: replay loop guard");
        if (c.size() < ell - 1) throw DecodingError("srt-balanced decode: truncated record");
        const bool row_kind = c.get(1);
        const std::size_t pos = bits_to_uint(c, 2, static_cast<unsigned>(pos_bits_));
        const BitVector payload =
            c.slice(2 + static_cast<std::size_t>(pos_bits_),
                    static_cast<std::size_t>(space_.target_bits()));
        BitVector window;
        try {
            window = space_.psi_unrank(payload);
        } catch (const std::invalid_argument&) {
            throw DecodingError("srt-balanced decode: record payload out of range");
        }
        c = c.erase(0, ell - 1);
        try {
            c = row_kind ? c.insert(pos, window)
                         : c.insert_strided(pos, static_cast<std::size_t>(n_), window);
        } catch (const std::out_of_range&) {
            throw DecodingError("srt-balanced decode: record position out of range");
        }
    }
    return c.slice(1, static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) - 1);
}

BitArray SrtBalancedCodec::extension_fill(const BitVector& cin) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t n2 = n * n;
    const std::size_t len = cin.size();
    if (len > n2 || len < n / 2)
        throw std::invalid_argument("extension_fill: need n/2 <= |c| <= n^2");
    if (len == n2) return BitArray::unflatten(cin, n, n);

    BitVector filled;     // rows [0, rows_filled) as one sequence
    std::size_t rows_filled;
    if (len == n / 2) {
        filled = cin.concat(cin.complement()); // one balanced row
        rows_filled = 1;
    } else {
        const std::size_t ell = static_cast<std::size_t>(ell_);
        if (len < ell) throw EncodingError("extension_fill: sequence shorter than one window");
        rows_filled = len / n + (len % n ? 1 : 0);
        if (len % n == 0) rows_filled += 1; // a whole fresh row of window repeats
        const BitVector w = cin.slice(len - ell, ell);
        filled = cin;
        while (filled.size() < rows_filled * n) filled.append(w);
        filled = filled.slice(0, rows_filled * n);
    }

    BitArray a(n, n);
    for (std::size_t r = 0; r < rows_filled; ++r) a.set_row(r, filled.slice(r * n, n));
    if (rows_filled == n) return a;

    if (rows_filled <= n / 2) {
        for (std::size_t r = 0; r < rows_filled; ++r)
            a.set_row(rows_filled + r, a.row(r).complement());
        BitVector alt0(n), alt1(n);
        for (std::size_t i = 0; i < n; ++i) {
            alt0.set(i, i % 2 == 1); // 0101...
            alt1.set(i, i % 2 == 0); // 1010...
        }
        for (std::size_t r = 2 * rows_filled; r < n; ++r)
            a.set_row(r, ((r - 2 * rows_filled) % 2 == 0) ? alt0 : alt1);
    } else {
        // Repeat each column's last ell bits above the final partial row.
        const std::size_t ell = static_cast<std::size_t>(ell_);
        const std::size_t q = rows_filled - 1; // complete data rows before the extended one
        if (q < ell) throw EncodingError("extension_fill: too few rows for column repeats");
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t r = rows_filled; r < n; ++r)
                a.set(r, col, a.get(q - ell + (r - rows_filled) % ell, col));
    }
    return a;
}

} // namespace wc2d
