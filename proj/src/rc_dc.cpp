#include "wc2d/rc_dc.hpp"

#include <algorithm>
#include <stdexcept>

#include "wc2d/errors.hpp"

namespace wc2d {

namespace {

bool is_pow2(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::int64_t ceil_log2(std::int64_t n) {
    std::int64_t b = 0;
    while ((std::int64_t{1} << b) < n) ++b;
    return b;
}

// Flatten a column range [c0, c0+w) of the first `rows` rows, row-major.
BitVector flatten_block(const BitArray& a, std::int64_t rows, std::int64_t c0, std::int64_t w) {
    BitVector v(static_cast<std::size_t>(rows * w));
    std::size_t k = 0;
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = c0; c < c0 + w; ++c)
            v.set(k++, a.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
    return v;
}

// Exchange the first t row-major cells between column blocks [c0, c0+w) and
// [c0+w, c0+2w); position j in both blocks shares a row, so row weights stay.
void swap_block_prefix(BitArray& a, std::int64_t c0, std::int64_t w, std::int64_t t) {
    for (std::int64_t j = 0; j < t; ++j) {
        const std::size_t r = static_cast<std::size_t>(j / w);
        const std::size_t cl = static_cast<std::size_t>(c0 + j % w);
        const std::size_t cr = static_cast<std::size_t>(c0 + w + j % w);
        const bool bl = a.get(r, cl);
        const bool br = a.get(r, cr);
        a.set(r, cl, br);
        a.set(r, cr, bl);
    }
}

} // namespace

DcBoundedCodec::DcBoundedCodec(std::int64_t n, const Fraction& p)
    : n_(n), p_(p),
      c_(Fraction(p.den, p.num).ceil_mul(1 + ceil_log2(n))),
      period_((p.den + p.num - 1) / p.num),
      space_(n, p) {
    if (!is_pow2(n_)) throw InfeasibleParams("dc-bounded: n must be a power of two");
    if (2 * p_.num >= p_.den) throw InfeasibleParams("dc-bounded: need p < 1/2");
    levels_ = ceil_log2(n_);
    const std::int64_t wmax = space_.max_weight();

    // (1/p)(1+log2 n) rows suffice only when 1/p and n/P divide evenly;
    // otherwise grow c until the serialized trace fits its block and the
    // per-column budget closes.
    bool ok = false;
    for (; c_ < n_; ++c_) {
        trace_bits_ = 0;
        idx_bits_.assign(static_cast<std::size_t>(levels_), 0);
        for (std::int64_t d = 0; d < levels_; ++d) {
            const std::int64_t m = (n_ - c_) * (n_ >> (d + 1)); // cells per child block
            idx_bits_[d] = ceil_log2(m + 1);
            trace_bits_ += (std::int64_t{1} << d) * idx_bits_[d];
        }
        const std::int64_t col_block = (c_ + period_ - 1) / period_; // per-column ones in B
        const std::int64_t leaf_cap = ((n_ - c_) * wmax + n_ - 1) / n_;
        if (c_ * (n_ / period_) >= trace_bits_ && leaf_cap + col_block <= wmax) {
            ok = true;
            break;
        }
    }
    if (!ok) throw InfeasibleParams("dc-bounded: n > (1/p)(1+log2 n) fails (no row budget fits "
                                    "the swap trace and the column bound)");
    message_bits_ = (n_ - c_) * space_.payload_bits();
    caps_.resize(static_cast<std::size_t>(levels_) + 1);
    caps_[0] = (n_ - c_) * wmax;
    for (std::int64_t d = 1; d <= levels_; ++d) caps_[d] = (caps_[d - 1] + 1) / 2;
}

BitArray DcBoundedCodec::encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != message_bits_)
        throw std::invalid_argument("dc-bounded encode: message size mismatch");
    BitArray a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    const std::int64_t pb = space_.payload_bits();
    for (std::int64_t r = 0; r < n_ - c_; ++r)
        a.set_row(static_cast<std::size_t>(r),
                  space_.payload_encode(msg.slice(static_cast<std::size_t>(r * pb),
                                                  static_cast<std::size_t>(pb))));

    SwapTrace trace;
    for (std::int64_t d = 0; d < levels_; ++d) {
        const std::int64_t w = n_ >> (d + 1); // child width
        for (std::int64_t b = 0; b < (std::int64_t{1} << d); ++b) {
            const std::int64_t c0 = b * 2 * w;
            const BitVector y = flatten_block(a, n_ - c_, c0, w);
            const BitVector z = flatten_block(a, n_ - c_, c0 + w, w);
            const auto t = swap_index_capped(y, z, caps_[d + 1]);
            if (!t) throw EncodingError("dc-bounded encode: no swap index at depth " +
                                        std::to_string(d));
            swap_block_prefix(a, c0, w, *t);
            trace.entries.push_back({d, b, *t});
        }
    }

    const BitArray block = pack_trace(serialize_trace(trace));
    for (std::int64_t r = 0; r < c_; ++r)
        a.set_row(static_cast<std::size_t>(n_ - c_ + r), block.row(static_cast<std::size_t>(r)));
    return a;
}

BitVector DcBoundedCodec::decode(const BitArray& a) const {
    if (static_cast<std::int64_t>(a.rows()) != n_ || static_cast<std::int64_t>(a.cols()) != n_)
        throw std::invalid_argument("dc-bounded decode: shape mismatch");
    BitArray block(static_cast<std::size_t>(c_), static_cast<std::size_t>(n_));
    for (std::int64_t r = 0; r < c_; ++r)
        block.set_row(static_cast<std::size_t>(r), a.row(static_cast<std::size_t>(n_ - c_ + r)));
    const SwapTrace trace = deserialize_trace(unpack_trace(block));

    BitArray work = a;
    for (auto it = trace.entries.rbegin(); it != trace.entries.rend(); ++it) {
        const std::int64_t w = n_ >> (it->depth + 1);
        swap_block_prefix(work, it->index * 2 * w, w, it->t);
    }
    BitVector msg;
    for (std::int64_t r = 0; r < n_ - c_; ++r)
        msg.append(space_.payload_decode(work.row(static_cast<std::size_t>(r))));
    return msg;
}

BitVector DcBoundedCodec::serialize_trace(const SwapTrace& trace) const {
    BitVector bits;
    for (const SwapEntry& e : trace.entries)
        bits.append(uint_to_bits(static_cast<std::uint64_t>(e.t),
                                 static_cast<unsigned>(idx_bits_[e.depth])));
    if (static_cast<std::int64_t>(bits.size()) != trace_bits_)
        throw std::logic_error("dc-bounded: trace length mismatch");
    return bits;
}

SwapTrace DcBoundedCodec::deserialize_trace(const BitVector& bits) const {
    SwapTrace trace;
    std::size_t pos = 0;
    for (std::int64_t d = 0; d < levels_; ++d) {
        const std::int64_t m = (n_ - c_) * (n_ >> (d + 1));
        for (std::int64_t b = 0; b < (std::int64_t{1} << d); ++b) {
            const std::int64_t t =
                static_cast<std::int64_t>(bits_to_uint(bits, pos, static_cast<unsigned>(idx_bits_[d])));
            pos += static_cast<std::size_t>(idx_bits_[d]);
            if (t > m) throw DecodingError("dc-bounded: swap index out of range");
            trace.entries.push_back({d, b, t});
        }
    }
    return trace;
}

BitArray DcBoundedCodec::pack_trace(const BitVector& trace) const {
    if (static_cast<std::int64_t>(trace.size()) > c_ * (n_ / period_))
        throw std::invalid_argument("pack_trace: trace too long");
    BitArray block(static_cast<std::size_t>(c_), static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < c_; ++i) {
        const std::int64_t phase = i % period_;
        for (std::int64_t k = 0; k * period_ + period_ <= n_; ++k) {
            const std::int64_t bit = k * c_ + i;
            if (bit < static_cast<std::int64_t>(trace.size()) &&
                trace.get(static_cast<std::size_t>(bit)))
                block.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k * period_ + phase),
                          true);
        }
    }
    return block;
}

BitVector DcBoundedCodec::unpack_trace(const BitArray& block) const {
    BitVector trace(static_cast<std::size_t>(trace_bits_));
    for (std::int64_t i = 0; i < c_; ++i) {
        const std::int64_t phase = i % period_;
        for (std::int64_t k = 0; k * period_ + period_ <= n_; ++k) {
            const std::int64_t bit = k * c_ + i;
            if (bit < trace_bits_ &&
                block.get(static_cast<std::size_t>(i), static_cast<std::size_t>(k * period_ + phase)))
                trace.set(static_cast<std::size_t>(bit), true);
        }
    }
    return trace;
}

DcBalancedCodec::DcBalancedCodec(std::int64_t n, const Fraction& eps)
    : n_(n), eps_(eps), c_(0), row_codec_(EpsRowCodec::make(n, eps)) {
    if (!is_pow2(n_)) throw InfeasibleParams("dc-balanced: n must be a power of two");
    c_ = row_codec_.c;
    if (n_ <= 2 * c_) throw InfeasibleParams("dc-balanced: n > 2c fails");
    if (eps_.floor_mul(n_) < 1) throw InfeasibleParams("dc-balanced: n*eps >= 1 fails");
    levels_ = ceil_log2(n_);
    message_bits_ = (n_ - 2 * c_) * (n_ - c_);
    trace_bits_ = (n_ - 1) * (c_ / 2);

    const std::int64_t rows = n_ - 2 * c_;
    for (std::int64_t d = 0; d < levels_; ++d) {
        const std::int64_t m = rows * (n_ >> (d + 1));
        sets_.push_back(EpsBalancingSet::make(m, eps_));
        if (sets_.back().size() > (std::size_t{1} << (c_ / 2)))
            throw InfeasibleParams("dc-balanced: balancing set exceeds c/2-bit ordinals");
    }
    // Full columns: leaf band of the data rows shifted by the exact c ones
    // contributed by the complement-pair block must stay inside the n-band.
    const WeightBand leaf = balanced_band(rows, eps_);
    const WeightBand full = balanced_band(n_, eps_);
    if (leaf.lo + c_ < full.lo || leaf.hi + c_ > full.hi)
        throw InfeasibleParams("dc-balanced: column band check fails");
}

BitArray DcBalancedCodec::encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != message_bits_)
        throw std::invalid_argument("dc-balanced encode: message size mismatch");
    const std::int64_t rows = n_ - 2 * c_;
    const std::int64_t k = n_ - c_;
    BitArray a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (std::int64_t r = 0; r < rows; ++r)
        a.set_row(static_cast<std::size_t>(r),
                  row_codec_.encode(msg.slice(static_cast<std::size_t>(r * k),
                                              static_cast<std::size_t>(k))));

    // Each split takes the in-set index centering the two halves best (free
    // choice: the ordinal is stored either way). Requiring plain band
    // membership instead strands the deepest levels whenever a parent sits at
    // its band edge, where no in-set index can reach the child band.
    SwapTrace trace;
    for (std::int64_t d = 0; d < levels_; ++d) {
        const std::int64_t w = n_ >> (d + 1);
        const std::int64_t m = rows * w;
        for (std::int64_t b = 0; b < (std::int64_t{1} << d); ++b) {
            const std::int64_t c0 = b * 2 * w;
            const BitVector y = flatten_block(a, rows, c0, w);
            const BitVector z = flatten_block(a, rows, c0 + w, w);
            const std::int64_t total = y.weight() + z.weight();
            std::size_t ord = 0;
            std::int64_t best = -1;
            for (std::size_t i = 0; i < sets_[d].indices.size(); ++i) {
                const std::int64_t t = sets_[d].indices[i];
                const std::int64_t f = z.prefix_weight(static_cast<std::size_t>(t)) +
                                       y.weight() - y.prefix_weight(static_cast<std::size_t>(t));
                const std::int64_t dev =
                    std::max(std::llabs(2 * f - m), std::llabs(2 * (total - f) - m));
                if (best < 0 || dev < best) {
                    best = dev;
                    ord = i;
                }
            }
            swap_block_prefix(a, c0, w, sets_[d].indices[ord]);
            trace.entries.push_back({d, b, static_cast<std::int64_t>(ord)});
        }
    }
    const WeightBand full = balanced_band(n_, eps_);
    for (std::int64_t col = 0; col < n_; ++col) {
        const std::int64_t wcol = a.col_prefix(static_cast<std::size_t>(col),
                                               static_cast<std::size_t>(rows)).weight();
        if (wcol + c_ < full.lo || wcol + c_ > full.hi)
            throw EncodingError("dc-balanced encode: column " + std::to_string(col) +
                                " missed the band");
    }

    BitVector bits;
    for (const SwapEntry& e : trace.entries)
        bits.append(uint_to_bits(static_cast<std::uint64_t>(e.t), static_cast<unsigned>(c_ / 2)));
    const BitArray block = pack_trace(bits);
    for (std::int64_t r = 0; r < 2 * c_; ++r)
        a.set_row(static_cast<std::size_t>(rows + r), block.row(static_cast<std::size_t>(r)));
    return a;
}

BitVector DcBalancedCodec::decode(const BitArray& a) const {
    if (static_cast<std::int64_t>(a.rows()) != n_ || static_cast<std::int64_t>(a.cols()) != n_)
        throw std::invalid_argument("dc-balanced decode: shape mismatch");
    const std::int64_t rows = n_ - 2 * c_;
    BitArray block(static_cast<std::size_t>(2 * c_), static_cast<std::size_t>(n_));
    for (std::int64_t r = 0; r < 2 * c_; ++r)
        block.set_row(static_cast<std::size_t>(r), a.row(static_cast<std::size_t>(rows + r)));
    const BitVector bits = unpack_trace(block);

    std::vector<SwapEntry> entries;
    std::size_t pos = 0;
    for (std::int64_t d = 0; d < levels_; ++d) {
        for (std::int64_t b = 0; b < (std::int64_t{1} << d); ++b) {
            const std::uint64_t ord = bits_to_uint(bits, pos, static_cast<unsigned>(c_ / 2));
            pos += static_cast<std::size_t>(c_ / 2);
            if (ord >= sets_[d].indices.size())
                throw DecodingError("dc-balanced: swap ordinal out of range");
            entries.push_back({d, b, sets_[d].indices[ord]});
        }
    }

    BitArray work = a;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        const std::int64_t w = n_ >> (it->depth + 1);
        swap_block_prefix(work, it->index * 2 * w, w, it->t);
    }
    BitVector msg;
    for (std::int64_t r = 0; r < rows; ++r)
        msg.append(row_codec_.decode(work.row(static_cast<std::size_t>(r))));
    return msg;
}

BitArray DcBalancedCodec::pack_trace(const BitVector& trace) const {
    if (static_cast<std::int64_t>(trace.size()) > c_ * (n_ / 2))
        throw std::invalid_argument("pack_trace: trace too long");
    BitArray block(static_cast<std::size_t>(2 * c_), static_cast<std::size_t>(n_));
    for (std::int64_t j = 0; j < c_; ++j) {
        for (std::int64_t kcell = 0; kcell < n_ / 2; ++kcell) {
            const std::int64_t bit = j * (n_ / 2) + kcell;
            const bool v =
                bit < static_cast<std::int64_t>(trace.size()) && trace.get(static_cast<std::size_t>(bit));
            block.set(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * kcell), v);
            block.set(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * kcell + 1), !v);
        }
        for (std::int64_t col = 0; col < n_; ++col)
            block.set(static_cast<std::size_t>(2 * j + 1), static_cast<std::size_t>(col),
                      !block.get(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(col)));
    }
    return block;
}

BitVector DcBalancedCodec::unpack_trace(const BitArray& block) const {
    BitVector trace(static_cast<std::size_t>(trace_bits_));
    for (std::int64_t j = 0; j < c_; ++j)
        for (std::int64_t kcell = 0; kcell < n_ / 2; ++kcell) {
            const std::int64_t bit = j * (n_ / 2) + kcell;
            if (bit < trace_bits_ &&
                block.get(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * kcell)))
                trace.set(static_cast<std::size_t>(bit), true);
        }
    return trace;
}

} // namespace wc2d
