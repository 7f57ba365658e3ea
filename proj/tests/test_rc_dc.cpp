#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wc2d/errors.hpp"
#include "wc2d/rc_dc.hpp"
#include "wc2d/verify.hpp"

using namespace wc2d;

namespace {

BitVector rand_msg(std::mt19937_64& rng, std::int64_t bits) {
    BitVector v(static_cast<std::size_t>(bits));
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() & 1);
    return v;
}

std::vector<BitVector> adversarial_msgs(std::int64_t bits) {
    std::vector<BitVector> out;
    out.emplace_back(static_cast<std::size_t>(bits), false);
    out.emplace_back(static_cast<std::size_t>(bits), true);
    BitVector single(static_cast<std::size_t>(bits));
    single.set(static_cast<std::size_t>(bits / 2), true);
    out.push_back(single);
    BitVector checker(static_cast<std::size_t>(bits));
    for (std::size_t i = 0; i < checker.size(); i += 2) checker.set(i, true);
    out.push_back(checker);
    BitVector runs(static_cast<std::size_t>(bits));
    for (std::size_t i = 0; i < checker.size() / 2; ++i) runs.set(i, true);
    out.push_back(runs);
    return out;
}

} // namespace

TEST_CASE("bounded: parameters at the production point") {
    const DcBoundedCodec codec(64, Fraction(1, 4));
    CHECK(codec.redundant_rows() == 28); // ceil((1/p)(1 + log2 n))
    CHECK(codec.message_bits() == (64 - 28) * codec.row_space().payload_bits());
    CHECK(codec.trace_bits() <= 64 * (1 + 6)); // n(1 + log2 n)
}

TEST_CASE("bounded: round-trip and verifier pass") {
    const DcBoundedCodec codec(64, Fraction(1, 4));
    const ConstraintSpec spec = ConstraintSpec::rc_bounded(64, Fraction(1, 4));
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const BitVector msg = rand_msg(rng, codec.message_bits());
        const BitArray a = codec.encode(msg);
        CHECK(check(a, spec).pass);
        CHECK(codec.decode(a) == msg);
    }
    for (const BitVector& msg : adversarial_msgs(codec.message_bits())) {
        const BitArray a = codec.encode(msg);
        CHECK(check(a, spec).pass);
        CHECK(codec.decode(a) == msg);
    }
}

TEST_CASE("bounded: swaps preserve every row weight") {
    const DcBoundedCodec codec(64, Fraction(1, 4));
    std::mt19937_64 rng(67);
    const BitVector msg = rand_msg(rng, codec.message_bits());
    const BitArray a = codec.encode(msg);
    // Row weights of the data region equal the weights the row codec produced.
    const std::int64_t pb = codec.row_space().payload_bits();
    for (std::int64_t r = 0; r < 64 - codec.redundant_rows(); ++r) {
        const BitVector row_word = codec.row_space().payload_encode(
            msg.slice(static_cast<std::size_t>(r * pb), static_cast<std::size_t>(pb)));
        CHECK(a.row_weight(static_cast<std::size_t>(r)) == row_word.weight());
    }
}

TEST_CASE("bounded: trace packing density and round-trip") {
    const DcBoundedCodec codec(64, Fraction(1, 4));
    std::mt19937_64 rng(71);
    // all-zero trace -> all-zero block
    CHECK(codec.pack_trace(BitVector(static_cast<std::size_t>(codec.trace_bits()))).flatten()
              .weight() == 0);
    for (int trial = 0; trial < 50; ++trial) {
        const BitVector trace = rand_msg(rng, codec.trace_bits());
        const BitArray block = codec.pack_trace(trace);
        CHECK(codec.unpack_trace(block) == trace);
        // one potential 1 per 4-wide cell per row
        for (std::size_t r = 0; r < block.rows(); ++r)
            CHECK(block.row_weight(r) <= 64 / 4);
        for (std::size_t c = 0; c < block.cols(); ++c)
            CHECK(block.col_weight(c) <= (28 + 3) / 4);
    }
}

TEST_CASE("bounded: infeasible parameters are rejected") {
    CHECK_THROWS_AS(DcBoundedCodec(60, Fraction(1, 4)), InfeasibleParams); // not a power of two
    CHECK_THROWS_AS(DcBoundedCodec(64, Fraction(1, 2)), InfeasibleParams); // p >= 1/2
    CHECK_THROWS_AS(DcBoundedCodec(16, Fraction(1, 4)), InfeasibleParams); // c >= n
}

TEST_CASE("balanced: redundancy formula at the production point") {
    const DcBalancedCodec codec(64, Fraction(1, 8));
    CHECK(codec.suffix_bits() == 6);
    CHECK(codec.message_bits() == (64 - 12) * (64 - 6));
    CHECK(codec.redundancy() == 3 * 6 * 64 - 2 * 6 * 6); // 1080
    CHECK(codec.redundancy() == 1080);
}

TEST_CASE("balanced: round-trip and verifier pass") {
    const DcBalancedCodec codec(64, Fraction(1, 8));
    const ConstraintSpec spec = ConstraintSpec::rc_balanced(64, Fraction(1, 8));
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const BitVector msg = rand_msg(rng, codec.message_bits());
        const BitArray a = codec.encode(msg);
        CHECK(check(a, spec).pass);
        CHECK(codec.decode(a) == msg);
    }
    for (const BitVector& msg : adversarial_msgs(codec.message_bits())) {
        const BitArray a = codec.encode(msg);
        CHECK(check(a, spec).pass);
        CHECK(codec.decode(a) == msg);
    }
}

TEST_CASE("balanced: complement-pair block balances every row and column") {
    const DcBalancedCodec codec(64, Fraction(1, 8));
    std::mt19937_64 rng(79);
    const BitVector trace = rand_msg(rng, codec.trace_bits());
    const BitArray block = codec.pack_trace(trace);
    CHECK(codec.unpack_trace(block) == trace);
    for (std::size_t r = 0; r < block.rows(); ++r)
        CHECK(block.row_weight(r) == 32); // exactly balanced rows
    for (std::size_t c = 0; c < block.cols(); ++c)
        CHECK(block.col_weight(c) == codec.suffix_bits()); // one 1 per row pair
}

TEST_CASE("balanced: trace length bound") {
    const DcBalancedCodec codec(64, Fraction(1, 8));
    CHECK(codec.trace_bits() == (64 - 1) * 3);
    CHECK(codec.trace_bits() <= 6 * 64 / 2); // <= cn/2
}

TEST_CASE("round-trip at a second parameter point") {
    const DcBoundedCodec bounded(128, Fraction(3, 8));
    const DcBalancedCodec balanced(128, Fraction(1, 4));
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const BitVector m1 = rand_msg(rng, bounded.message_bits());
        CHECK(bounded.decode(bounded.encode(m1)) == m1);
        CHECK(check(bounded.encode(m1), ConstraintSpec::rc_bounded(128, Fraction(3, 8))).pass);
        const BitVector m2 = rand_msg(rng, balanced.message_bits());
        CHECK(balanced.decode(balanced.encode(m2)) == m2);
        CHECK(check(balanced.encode(m2), ConstraintSpec::rc_balanced(128, Fraction(1, 4))).pass);
    }
}
