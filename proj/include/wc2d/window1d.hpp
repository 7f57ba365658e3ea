#pragma once

#include <cstdint>

#include "wc2d/bitvec.hpp"
#include "wc2d/forbidden.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

// One-redundant-bit window codec: maps frame-1 message bits to a frame-bit
// word whose every ell-bit window has weight inside `band`. Out-of-band
// windows are excised and replaced by a prepended record
//   1 | position (ceil(log2 frame) bits) | Psi(window)
// of ell-1 bits; decoding replays records until the leading bit is 0.
class Window1dCodec {
public:
    Window1dCodec(std::int64_t frame, std::int64_t ell, WeightBand band);

    std::int64_t frame() const { return frame_; }
    std::int64_t ell() const { return ell_; }
    const WeightBand& band() const { return band_; }
    std::int64_t message_bits() const { return frame_ - 1; }
    const ForbiddenSpace& space() const { return space_; }
    std::int64_t pos_bits() const { return pos_bits_; }

    BitVector encode(const BitVector& msg) const;
    BitVector decode(const BitVector& word) const;

private:
    std::int64_t frame_;
    std::int64_t ell_;
    WeightBand band_;
    std::int64_t pos_bits_;
    ForbiddenSpace space_;
};

} // namespace wc2d
