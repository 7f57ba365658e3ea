#include "wc2d/codecs.hpp"

#include <stdexcept>

namespace wc2d {

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::RcBoundedDc: return "rc-bounded-dc";
        case Mode::RcBoundedSrt: return "rc-bounded-srt";
        case Mode::RcBalancedDc: return "rc-balanced-dc";
        case Mode::RcBalancedSrt: return "rc-balanced-srt";
        case Mode::SubBounded: return "sub-bounded";
        case Mode::SubBalanced: return "sub-balanced";
    }
    return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
    for (Mode m : {Mode::RcBoundedDc, Mode::RcBoundedSrt, Mode::RcBalancedDc,
                   Mode::RcBalancedSrt, Mode::SubBounded, Mode::SubBalanced})
        if (mode_name(m) == name) return m;
    return std::nullopt;
}

namespace {

template <typename Inner>
class CodecAdapter final : public Codec {
public:
    CodecAdapter(Mode mode, Inner inner, ConstraintSpec spec)
        : mode_(mode), inner_(std::move(inner)), spec_(spec) {}
    Mode mode() const override { return mode_; }
    std::int64_t n() const override { return inner_.n(); }
    std::int64_t message_bits() const override { return inner_.message_bits(); }
    BitArray encode(const BitVector& msg) const override { return inner_.encode(msg); }
    BitVector decode(const BitArray& a) const override { return inner_.decode(a); }
    ConstraintSpec constraint() const override { return spec_; }

private:
    Mode mode_;
    Inner inner_;
    ConstraintSpec spec_;
};

template <typename Inner>
std::unique_ptr<Codec> adapt(Mode mode, Inner inner, ConstraintSpec spec) {
    return std::make_unique<CodecAdapter<Inner>>(mode, std::move(inner), spec);
}

} // namespace

std::unique_ptr<Codec> make_codec(const CodecParams& prm) {
    switch (prm.mode) {
        case Mode::RcBoundedDc:
            return adapt(prm.mode, DcBoundedCodec(prm.n, prm.p),
                         ConstraintSpec::rc_bounded(prm.n, prm.p));
        case Mode::RcBoundedSrt:
            return adapt(prm.mode, SrtBoundedCodec(prm.n, prm.p),
                         ConstraintSpec::rc_bounded(prm.n, prm.p));
        case Mode::RcBalancedDc:
            return adapt(prm.mode, DcBalancedCodec(prm.n, prm.eps),
                         ConstraintSpec::rc_balanced(prm.n, prm.eps));
        case Mode::RcBalancedSrt:
            return adapt(prm.mode, SrtBalancedCodec(prm.n, prm.eps, prm.window_alpha),
                         ConstraintSpec::rc_balanced(prm.n, prm.eps));
        case Mode::SubBounded:
            return adapt(prm.mode, SubBoundedCodec(prm.n, prm.m, prm.p),
                         ConstraintSpec::sub_bounded(prm.n, prm.m, prm.p));
        case Mode::SubBalanced:
            return adapt(prm.mode, SubBalancedCodec(prm.n, prm.m, prm.eps),
                         ConstraintSpec::sub_balanced(prm.n, prm.m, prm.eps));
    }
    throw std::invalid_argument("make_codec: unknown mode");
}

} // namespace wc2d
