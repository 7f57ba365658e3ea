#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wc2d/verify.hpp"

using namespace wc2d;

namespace {

// Direct per-definition recount, used as the oracle for the sliding checker.
bool member_oracle(const BitArray& a, const ConstraintSpec& spec) {
    const WeightBand band = spec.line_band();
    if (spec.family == ConstraintFamily::RcBounded ||
        spec.family == ConstraintFamily::RcBalanced) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!band.contains(a.row_weight(i)) || !band.contains(a.col_weight(i))) return false;
        return true;
    }
    for (std::size_t r = 0; r + spec.m <= a.rows(); ++r)
        for (std::size_t c = 0; c + spec.m <= a.cols(); ++c)
            if (!band.contains(a.block_weight(r, c, spec.m, spec.m))) return false;
    return true;
}

} // namespace

TEST_CASE("membership fixtures: RC holds but a 2x2 subarray fails") {
    const BitArray a = BitArray::from_strings({"0000", "0000", "0001", "0010"});
    const ConstraintSpec rc = ConstraintSpec::rc_bounded(4, Fraction(1, 4));
    const ConstraintSpec sub = ConstraintSpec::sub_bounded(4, 2, Fraction(1, 4));
    CHECK(check(a, rc).pass);
    const ConstraintReport rep = check(a, sub);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->kind == Violation::Kind::Subarray);
    CHECK(rep.first_violation->index_row == 2);
    CHECK(rep.first_violation->index_col == 2);
    CHECK(rep.first_violation->weight == 2);
}

TEST_CASE("membership fixtures: subarrays hold but column 1 fails") {
    const BitArray b = BitArray::from_strings({"1000", "0010", "1000", "0001"});
    const ConstraintSpec rc = ConstraintSpec::rc_bounded(4, Fraction(1, 4));
    const ConstraintSpec sub = ConstraintSpec::sub_bounded(4, 2, Fraction(1, 4));
    CHECK(check(b, sub).pass);
    const ConstraintReport rep = check(b, rc);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->kind == Violation::Kind::Column);
    CHECK(rep.first_violation->index_col == 0);
    CHECK(rep.first_violation->weight == 2);
}

TEST_CASE("all-zero array: every bounded spec passes, balanced specs fail") {
    const BitArray z(4, 4);
    CHECK(check(z, ConstraintSpec::rc_bounded(4, Fraction(1, 4))).pass);
    CHECK(check(z, ConstraintSpec::sub_bounded(4, 2, Fraction(1, 2))).pass);
    CHECK_FALSE(check(z, ConstraintSpec::rc_balanced(4, Fraction(1, 4))).pass);
    CHECK_FALSE(check(z, ConstraintSpec::sub_balanced(4, 2, Fraction(1, 4))).pass);
}

TEST_CASE("sliding subarray sums agree with direct recount") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4 + rng() % 5;
        const std::size_t m = 2 + rng() % (n - 2);
        BitArray a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a.set(r, c, rng() % 3 == 0);
        const ConstraintSpec spec =
            ConstraintSpec::sub_bounded(static_cast<std::int64_t>(n),
                                        static_cast<std::int64_t>(m), Fraction(1, 3));
        CHECK(check(a, spec).pass == member_oracle(a, spec));
    }
}

TEST_CASE("census fixtures at n=2") {
    CHECK(census(ConstraintSpec::rc_bounded(2, Fraction(1, 2))) == 7);
    CHECK(census(ConstraintSpec::rc_balanced(2, Fraction(0, 1))) == 2);
    CHECK(census(ConstraintSpec::sub_bounded(2, 2, Fraction(1, 1))) == 16);
}

TEST_CASE("census is monotone in p and bounded by 2^(n^2)") {
    for (std::int64_t n = 2; n <= 4; ++n) {
        mpz_class prev = 0;
        for (const Fraction p : {Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1, 1)}) {
            const mpz_class c = census(ConstraintSpec::rc_bounded(n, p));
            CHECK(c >= prev);
            CHECK(c <= (mpz_class(1) << static_cast<unsigned long>(n * n)));
            prev = c;
        }
        CHECK(prev == (mpz_class(1) << static_cast<unsigned long>(n * n)));
    }
}

TEST_CASE("census rejects oversized n") {
    CHECK_THROWS_AS((void)census(ConstraintSpec::rc_bounded(6, Fraction(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("report carries weights and margins") {
    const BitArray a = BitArray::from_strings({"1100", "0011", "1010", "0101"});
    const ConstraintReport rep = check(a, ConstraintSpec::rc_balanced(4, Fraction(1, 4)));
    CHECK(rep.pass);
    CHECK(rep.row_weights == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(rep.col_weights == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(rep.margin_lo == 1);
    CHECK(rep.margin_hi == 1);
    CHECK(rep.describe() == "pass");
}
