#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wc2d/errors.hpp"
#include "wc2d/window1d.hpp"

using namespace wc2d;

namespace {

void check_windows(const BitVector& w, std::int64_t ell, const WeightBand& band) {
    CHECK(scan_violation(w, ell, band, 1) == std::nullopt);
}

} // namespace

TEST_CASE("no forbidden window means passthrough with a prepended 0") {
    const Window1dCodec codec(64, 32, balanced_band(32, Fraction(1, 4)));
    BitVector msg(63);
    for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, i % 2 == 0);
    const BitVector word = codec.encode(msg);
    BitVector expect(1);
    expect.append(msg);
    CHECK(word == expect);
    CHECK(codec.decode(word) == msg);
}

TEST_CASE("redundancy is exactly one bit") {
    const Window1dCodec codec(256, 64, balanced_band(64, Fraction(1, 4)));
    CHECK(codec.message_bits() == 255);
    CHECK(codec.frame() == 256);
}

TEST_CASE("round-trip and window compliance on random messages") {
    const std::int64_t frame = 1 << 14;
    const Window1dCodec codec(frame, 64, bounded_band(64, Fraction(3, 4)));
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        BitVector msg(static_cast<std::size_t>(frame - 1));
        for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, rng() & 1);
        const BitVector word = codec.encode(msg);
        CHECK(static_cast<std::int64_t>(word.size()) == frame);
        check_windows(word, 64, codec.band());
        CHECK(codec.decode(word) == msg);
    }
}

TEST_CASE("adversarial messages traverse the replacement path") {
    const std::int64_t frame = 1 << 14;
    const Window1dCodec codec(frame, 64, bounded_band(64, Fraction(3, 4)));
    std::vector<BitVector> messages;
    messages.emplace_back(static_cast<std::size_t>(frame - 1), true);  // all ones
    messages.emplace_back(static_cast<std::size_t>(frame - 1), false); // all zeros (compliant)
    BitVector half(static_cast<std::size_t>(frame - 1));
    for (std::size_t i = 0; i < half.size() / 2; ++i) half.set(i, true); // long run
    messages.push_back(half);
    for (const BitVector& msg : messages) {
        const BitVector word = codec.encode(msg);
        CHECK(static_cast<std::int64_t>(word.size()) == frame);
        check_windows(word, 64, codec.band());
        CHECK(codec.decode(word) == msg);
    }
}

TEST_CASE("balanced band variant, all-zeros forces maximal replacement work") {
    const std::int64_t frame = 4096;
    const Window1dCodec codec(frame, 32, balanced_band(32, Fraction(15, 32)));
    BitVector msg(static_cast<std::size_t>(frame - 1));
    const BitVector word = codec.encode(msg);
    check_windows(word, 32, codec.band());
    CHECK(codec.decode(word) == msg);

    BitVector ones(static_cast<std::size_t>(frame - 1), true);
    const BitVector word2 = codec.encode(ones);
    check_windows(word2, 32, codec.band());
    CHECK(codec.decode(word2) == ones);
}

TEST_CASE("infeasible parameters are rejected") {
    // ell too small to host marker + position + payload
    CHECK_THROWS_AS(Window1dCodec(1 << 14, 8, balanced_band(8, Fraction(1, 4))),
                    InfeasibleParams);
    CHECK_THROWS_AS(Window1dCodec(64, 128, balanced_band(128, Fraction(1, 4))),
                    InfeasibleParams);
}

TEST_CASE("every replacement shortens the sequence by one") {
    // indirect invariant: encoding terminates and output length is exact even
    // for inputs that force thousands of replacements
    const std::int64_t frame = 1 << 12;
    const Window1dCodec codec(frame, 32, balanced_band(32, Fraction(7, 16)));
    BitVector msg(static_cast<std::size_t>(frame - 1));
    const BitVector word = codec.encode(msg);
    CHECK(static_cast<std::int64_t>(word.size()) == frame);
    CHECK(codec.decode(word) == msg);
}
