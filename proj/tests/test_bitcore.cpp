#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wc2d/bitarray.hpp"
#include "wc2d/bitvec.hpp"
#include "wc2d/fraction.hpp"

using namespace wc2d;

namespace {

BitVector rand_vec(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

} // namespace

TEST_CASE("weight") {
    CHECK(BitVector::from_string("00111").weight() == 3);
    CHECK(BitVector().weight() == 0);
    CHECK(BitVector::from_string("11111111").weight() == 8);
}

TEST_CASE("complement") {
    CHECK(BitVector::from_string("00111").complement() == BitVector::from_string("11000"));
    CHECK(BitVector().complement() == BitVector());
    const BitVector v = BitVector::from_string("1010");
    CHECK(v.complement().complement() == v);
}

TEST_CASE("flip_prefix") {
    CHECK(BitVector::from_string("0000000000").flip_prefix(4) ==
          BitVector::from_string("1111000000"));
    const BitVector v = BitVector::from_string("011010");
    CHECK(v.flip_prefix(0) == v);
    CHECK(BitVector::from_string("1100").flip_prefix(4) == BitVector::from_string("0011"));
    CHECK_THROWS_AS((void)v.flip_prefix(7), std::out_of_range);
}

TEST_CASE("flip_prefix weight identity, exhaustive small lengths") {
    for (std::size_t len = 0; len <= 8; ++len) {
        const std::uint64_t total = 1ull << len;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            BitVector v(len);
            for (std::size_t i = 0; i < len; ++i)
                if ((bits >> i) & 1) v.set(i, true);
            for (std::size_t t = 0; t <= len; ++t) {
                const std::int64_t expect = v.weight() + static_cast<std::int64_t>(t) -
                                            2 * v.prefix_weight(t);
                CHECK(v.flip_prefix(t).weight() == expect);
            }
        }
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 9 + rng() % 4; // 9..12
        const BitVector v = rand_vec(rng, len);
        const std::size_t t = rng() % (len + 1);
        CHECK(v.flip_prefix(t).weight() ==
              v.weight() + static_cast<std::int64_t>(t) - 2 * v.prefix_weight(t));
    }
}

TEST_CASE("swap_prefix") {
    auto [a, b] = BitVector::swap_prefix(BitVector::from_string("00"),
                                         BitVector::from_string("11"), 1);
    CHECK(a == BitVector::from_string("10"));
    CHECK(b == BitVector::from_string("01"));

    const BitVector y = BitVector::from_string("0110");
    const BitVector z = BitVector::from_string("1001");
    auto [c, d] = BitVector::swap_prefix(y, z, 0);
    CHECK(c == y);
    CHECK(d == z);

    auto [e, f] = BitVector::swap_prefix(BitVector::from_string("1110000000"),
                                         BitVector::from_string("1101101111"), 6);
    CHECK(e == BitVector::from_string("1101100000"));
    CHECK(f == BitVector::from_string("1110001111"));

    CHECK_THROWS_AS((void)BitVector::swap_prefix(y, BitVector::from_string("101"), 1),
                    std::invalid_argument);
}

TEST_CASE("swap_prefix conserves total weight and is involutive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + rng() % 130;
        const BitVector y = rand_vec(rng, m);
        const BitVector z = rand_vec(rng, m);
        const std::size_t t = rng() % (m + 1);
        const auto [a, b] = BitVector::swap_prefix(y, z, t);
        CHECK(a.weight() + b.weight() == y.weight() + z.weight());
        const auto [y2, z2] = BitVector::swap_prefix(a, b, t);
        CHECK(y2 == y);
        CHECK(z2 == z);
    }
}

TEST_CASE("flatten and unflatten") {
    const BitArray a = BitArray::from_strings({"101", "010", "110"});
    CHECK(a.flatten() == BitVector::from_string("101010110"));
    CHECK(BitArray::unflatten(BitVector::from_string("101010110"), 3, 3) == a);

    for (std::uint64_t bits = 0; bits < 16; ++bits) { // all 2x2 arrays
        BitVector v(4);
        for (std::size_t i = 0; i < 4; ++i)
            if ((bits >> i) & 1) v.set(i, true);
        CHECK(BitArray::unflatten(v, 2, 2).flatten() == v);
    }

    const BitVector row = BitVector::from_string("110100");
    CHECK(BitArray::unflatten(row, 1, 6).flatten() == row);
    CHECK_THROWS_AS((void)BitArray::unflatten(row, 2, 4), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const BitVector v = rand_vec(rng, r * c);
        CHECK(BitArray::unflatten(v, r, c).flatten() == v);
    }
}

TEST_CASE("array row/column views") {
    const BitArray a = BitArray::from_strings({"1011", "0100", "1110", "0001"});
    CHECK(a.row(2) == BitVector::from_string("1110"));
    CHECK(a.col(0) == BitVector::from_string("1010"));
    CHECK(a.col(3) == BitVector::from_string("1001"));
    CHECK(a.row_prefix(0, 2) == BitVector::from_string("10"));
    CHECK(a.col_prefix(2, 3) == BitVector::from_string("101"));
    CHECK(a.row_weight(0) == 3);
    CHECK(a.col_weight(1) == 2);
    CHECK(a.block_weight(1, 1, 2, 2) == 3);

    BitArray b = a;
    b.set_col(1, BitVector::from_string("1111"));
    CHECK(b.col(1) == BitVector::from_string("1111"));
    CHECK(b.row(1) == BitVector::from_string("0100"));
}

TEST_CASE("slices, splices and strided splices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 300;
        const BitVector v = rand_vec(rng, n);
        const std::size_t pos = rng() % n;
        const std::size_t len = rng() % (n - pos + 1);
        CHECK(v.erase(pos, len).insert(pos, v.slice(pos, len)) == v);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t stride = 1 + rng() % 9;
        const std::size_t count = 1 + rng() % 12;
        const std::size_t n = stride * count + rng() % 40 + 1;
        const BitVector v = rand_vec(rng, n);
        const std::size_t pos = rng() % (n - stride * (count - 1));
        const BitVector picked = v.gather(pos, stride, count);
        CHECK(v.erase_strided(pos, stride, count).insert_strided(pos, stride, picked) == v);
    }
}

TEST_CASE("integer rendering is most-significant-first") {
    CHECK(bits_to_uint(BitVector::from_string("1011"), 0, 4) == 11);
    CHECK(uint_to_bits(11, 4) == BitVector::from_string("1011"));
    CHECK(bits_to_uint(uint_to_bits(0, 7), 0, 7) == 0);
}

TEST_CASE("fraction bands") {
    const WeightBand b = balanced_band(64, Fraction(1, 8));
    CHECK(b.lo == 24);
    CHECK(b.hi == 40);
    const WeightBand p = bounded_band(10, Fraction(1, 4));
    CHECK(p.lo == 0);
    CHECK(p.hi == 2);
    CHECK(balanced_band(3, Fraction(1, 12)).empty());
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(1, 3).floor_mul(10) == 3);
    CHECK(Fraction(1, 3).ceil_mul(10) == 4);
}
