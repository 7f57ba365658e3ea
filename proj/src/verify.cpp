#include "wc2d/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wc2d {

WeightBand ConstraintSpec::line_band() const {
    switch (family) {
        case ConstraintFamily::RcBounded: return bounded_band(n, p);
        case ConstraintFamily::RcBalanced: return balanced_band(n, eps);
        case ConstraintFamily::SubBounded: return bounded_band(m * m, p);
        case ConstraintFamily::SubBalanced: return balanced_band(m * m, eps);
    }
    return {};
}

std::string ConstraintReport::describe() const {
    if (pass) return "pass";
    const Violation& v = *first_violation;
    std::string where;
    switch (v.kind) {
        case Violation::Kind::Row: where = "row " + std::to_string(v.index_row); break;
        case Violation::Kind::Column: where = "column " + std::to_string(v.index_col); break;
        case Violation::Kind::Subarray:
            where = "subarray at (" + std::to_string(v.index_row) + "," +
                    std::to_string(v.index_col) + ")";
            break;
    }
    return "fail: " + where + " has weight " + std::to_string(v.weight);
}

ConstraintReport check(const BitArray& a, const ConstraintSpec& spec) {
    if (static_cast<std::int64_t>(a.rows()) != spec.n ||
        static_cast<std::int64_t>(a.cols()) != spec.n)
        throw std::invalid_argument("check: array shape mismatch");
    ConstraintReport rep;
    const WeightBand band = spec.line_band();
    rep.margin_lo = std::numeric_limits<std::int64_t>::max();
    rep.margin_hi = std::numeric_limits<std::int64_t>::max();
    auto account = [&](std::int64_t w, Violation v) {
        rep.margin_lo = std::min(rep.margin_lo, w - band.lo);
        rep.margin_hi = std::min(rep.margin_hi, band.hi - w);
        if (!band.contains(w) && !rep.first_violation) {
            v.weight = w;
            rep.first_violation = v;
        }
    };

    if (spec.family == ConstraintFamily::RcBounded || spec.family == ConstraintFamily::RcBalanced) {
        for (std::int64_t r = 0; r < spec.n; ++r) {
            const std::int64_t w = a.row_weight(static_cast<std::size_t>(r));
            rep.row_weights.push_back(w);
            account(w, {Violation::Kind::Row, r, 0, 0});
        }
        for (std::int64_t c = 0; c < spec.n; ++c) {
            const std::int64_t w = a.col_weight(static_cast<std::size_t>(c));
            rep.col_weights.push_back(w);
            account(w, {Violation::Kind::Column, 0, c, 0});
        }
    } else {
        if (spec.m <= 0 || spec.m > spec.n)
            throw std::invalid_argument("check: need 0 < m <= n");
        // 2D sliding sums: column sums over m-row strips, then slide across.
        const std::int64_t n = spec.n, m = spec.m;
        std::vector<std::int64_t> colsum(static_cast<std::size_t>(n), 0);
        for (std::int64_t r = 0; r < m; ++r)
            for (std::int64_t c = 0; c < n; ++c)
                colsum[c] += a.get(r, c);
        for (std::int64_t r0 = 0;; ++r0) {
            std::int64_t w = 0;
            for (std::int64_t c = 0; c < m; ++c) w += colsum[c];
            for (std::int64_t c0 = 0;; ++c0) {
                account(w, {Violation::Kind::Subarray, r0, c0, 0});
                if (c0 + m >= n) break;
                w += colsum[c0 + m] - colsum[c0];
            }
            if (r0 + m >= n) break;
            for (std::int64_t c = 0; c < n; ++c)
                colsum[c] += a.get(r0 + m, c) - a.get(r0, c);
        }
    }
    rep.pass = !rep.first_violation.has_value();
    return rep;
}

mpz_class census(const ConstraintSpec& spec) {
    if (spec.n > 5) throw std::invalid_argument("census: n too large for enumeration");
    const std::int64_t n = spec.n;
    const std::uint64_t total = 1ull << (n * n);
    mpz_class count = 0;
    BitArray a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::int64_t i = 0; i < n * n; ++i)
            a.set(static_cast<std::size_t>(i / n), static_cast<std::size_t>(i % n),
                  (bits >> i) & 1u);
        if (check(a, spec).pass) ++count;
    }
    return count;
}

} // namespace wc2d
