#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "wc2d/rc_dc.hpp"
#include "wc2d/rc_srt.hpp"
#include "wc2d/subarray.hpp"
#include "wc2d/verify.hpp"

namespace wc2d {

enum class Mode : std::uint8_t {
    RcBoundedDc = 0,
    RcBoundedSrt = 1,
    RcBalancedDc = 2,
    RcBalancedSrt = 3,
    SubBounded = 4,
    SubBalanced = 5,
};

std::string mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string& name);

// Uniform interface over the six codec families for the container and CLI.
class Codec {
public:
    virtual ~Codec() = default;
    virtual Mode mode() const = 0;
    virtual std::int64_t n() const = 0;
    virtual std::int64_t message_bits() const = 0;
    virtual BitArray encode(const BitVector& msg) const = 0;
    virtual BitVector decode(const BitArray& a) const = 0;
    virtual ConstraintSpec constraint() const = 0;
    std::int64_t redundancy() const { return n() * n() - message_bits(); }
};

struct CodecParams {
    Mode mode;
    std::int64_t n = 0;
    std::int64_t m = 0;
    Fraction p;
    Fraction eps;
    std::optional<double> window_alpha;
};

std::unique_ptr<Codec> make_codec(const CodecParams& params);

} // namespace wc2d
