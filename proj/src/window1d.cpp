#include "wc2d/window1d.hpp"

#include "wc2d/errors.hpp"

namespace wc2d {

namespace {
std::int64_t ceil_log2(std::int64_t n) {
    std::int64_t b = 0;
    while ((std::int64_t{1} << b) < n) ++b;
    return b;
}
} // namespace

Window1dCodec::Window1dCodec(std::int64_t frame, std::int64_t ell, WeightBand band)
    : frame_(frame), ell_(ell), band_(band), pos_bits_(ceil_log2(frame)),
      space_(ell, band, ell - 2 - ceil_log2(frame)) {
    if (ell < 1 || ell > frame)
        throw InfeasibleParams("window codec: need 1 <= ell <= frame");
    if (space_.target_bits() < 0 || !space_.feasible())
        throw InfeasibleParams(
            "window codec: |F(ell,band)| <= 2^(ell-2-ceil(log2 frame)) fails");
}

BitVector Window1dCodec::encode(const BitVector& msg) const {
    if (static_cast<std::int64_t>(msg.size()) != frame_ - 1)
        throw std::invalid_argument("window encode: message size mismatch");
    BitVector c(1);
    c.append(msg); // 0 || msg
    std::int64_t guard = frame_ + 1;
    while (true) {
        const auto hit = scan_violation(c, ell_, band_, 1);
        if (!hit) break;
        if (--guard < 0) throw EncodingError("window encode: replacement loop guard");
        const BitVector y = c.slice(*hit, static_cast<std::size_t>(ell_));
        BitVector record(1);
        record.set(0, true);
        record.append(uint_to_bits(*hit, static_cast<unsigned>(pos_bits_)));
        record.append(space_.psi_rank(y));
        c = record.concat(c.erase(*hit, static_cast<std::size_t>(ell_)));
    }
    if (static_cast<std::int64_t>(c.size()) < frame_) {
        if (static_cast<std::int64_t>(c.size()) < ell_)
            throw EncodingError("window encode: sequence shrank below one window");
        // Repeating the compliant suffix only produces cyclic shifts of it,
        // so no new out-of-band window can appear.
        const BitVector w = c.slice(c.size() - static_cast<std::size_t>(ell_),
                                    static_cast<std::size_t>(ell_));
        while (static_cast<std::int64_t>(c.size()) < frame_) c.append(w);
        c = c.slice(0, static_cast<std::size_t>(frame_));
    }
    return c;
}

BitVector Window1dCodec::decode(const BitVector& word) const {
    if (static_cast<std::int64_t>(word.size()) != frame_)
        throw std::invalid_argument("window decode: word size mismatch");
    BitVector c = word;
    std::int64_t guard = frame_ + 1;
    while (c.get(0)) {
        if (--guard < 0) throw DecodingError("window decode: replay loop guard");
        if (static_cast<std::int64_t>(c.size()) < ell_ - 1)
            throw DecodingError("window decode: truncated record");
        const std::size_t pos = bits_to_uint(c, 1, static_cast<unsigned>(pos_bits_));
        const BitVector payload =
            c.slice(1 + static_cast<std::size_t>(pos_bits_),
                    static_cast<std::size_t>(space_.target_bits()));
        BitVector y;
        try {
            y = space_.psi_unrank(payload);
        } catch (const std::invalid_argument&) {
            throw DecodingError("window decode: record payload out of range");
        }
        c = c.erase(0, static_cast<std::size_t>(ell_ - 1));
        if (pos > c.size()) throw DecodingError("window decode: record position out of range");
        c = c.insert(pos, y);
    }
    return c.slice(1, static_cast<std::size_t>(frame_ - 1));
}

} // namespace wc2d
