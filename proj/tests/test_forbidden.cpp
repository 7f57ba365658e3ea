#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "wc2d/forbidden.hpp"

using namespace wc2d;

namespace {

std::vector<std::string> enumerate_forbidden(std::int64_t ell, const WeightBand& band) {
    std::vector<std::string> words;
    for (std::uint64_t v = 0; v < (1ull << ell); ++v) {
        std::string s(static_cast<std::size_t>(ell), '0');
        std::int64_t w = 0;
        for (std::int64_t i = 0; i < ell; ++i)
            if ((v >> i) & 1) {
                s[static_cast<std::size_t>(i)] = '1';
                ++w;
            }
        if (!band.contains(w)) words.push_back(std::move(s));
    }
    std::sort(words.begin(), words.end());
    return words;
}

} // namespace

TEST_CASE("cardinality fixture: ell=6, weight band [2,4]") {
    const ForbiddenSpace fs(6, WeightBand{2, 4}, 4);
    CHECK(fs.cardinality() == 14); // C(6,0)+C(6,1)+C(6,5)+C(6,6)
    CHECK(fs.feasible());
    CHECK(fs.psi_rank(BitVector::from_string("000000")) == uint_to_bits(0, 4));
}

TEST_CASE("psi is the lexicographic rank over F, exhaustive ell <= 16") {
    std::mt19937_64 rng(37);
    for (std::int64_t ell : {4, 6, 9, 12, 16}) {
        for (const WeightBand band :
             {balanced_band(ell, Fraction(1, 4)), balanced_band(ell, Fraction(1, 8)),
              bounded_band(ell, Fraction(3, 4))}) {
            const auto words = enumerate_forbidden(ell, band);
            const ForbiddenSpace fs(ell, band, ell);
            REQUIRE(fs.cardinality() == static_cast<long>(words.size()));
            for (std::size_t j = 0; j < words.size(); ++j) {
                const BitVector y = BitVector::from_string(words[j]);
                CHECK(fs.rank_value(y) == static_cast<long>(j));
                CHECK(fs.unrank_value(static_cast<long>(j)) == y);
            }
        }
    }
}

TEST_CASE("psi at window lengths far beyond table size") {
    const std::int64_t ell = 512;
    const WeightBand band = balanced_band(ell, Fraction(1, 8));
    const ForbiddenSpace fs(ell, band, ell - 23);
    REQUIRE(fs.feasible());
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        // random member of F: draw until outside the band
        BitVector y(static_cast<std::size_t>(ell));
        do {
            for (std::size_t i = 0; i < y.size(); ++i) y.set(i, (rng() % 16) < 5);
        } while (band.contains(y.weight()));
        const mpz_class r = fs.rank_value(y);
        CHECK(fs.unrank_value(r) == y);
        CHECK(fs.psi_unrank(fs.psi_rank(y)) == y);
    }
    // boundary members
    CHECK(fs.unrank_value(0) == BitVector(static_cast<std::size_t>(ell)));
    CHECK(fs.rank_value(BitVector(static_cast<std::size_t>(ell), true)) == fs.cardinality() - 1);
}

TEST_CASE("infeasible target width is reported") {
    const ForbiddenSpace fs(6, WeightBand{2, 4}, 3); // |F| = 14 > 8
    CHECK_FALSE(fs.feasible());
}

TEST_CASE("scan_violation on consecutive windows") {
    const WeightBand band = balanced_band(4, Fraction(1, 4)); // [1, 3] roughly
    CHECK(scan_violation(BitVector::from_string("00000000"), 4, band, 1) == 0);
    CHECK(scan_violation(BitVector::from_string("10101010"), 4, band, 1) == std::nullopt);
    CHECK(scan_violation(BitVector::from_string("10100000"), 4, band, 1) == 3);
    CHECK(scan_violation(BitVector::from_string("101"), 4, band, 1) == std::nullopt);
}

TEST_CASE("strided scan agrees with a transpose oracle") {
    // A stride-n window of v starting at i reads column (i mod n) of the
    // row-major layout from row (i div n); in the transposed flattening those
    // are the consecutive windows that stay inside one row. Every such
    // violation must agree, and the scan must return the minimal start.
    std::mt19937_64 rng(43);
    const std::size_t n = 8;
    const std::int64_t ell = 4;
    const WeightBand band = balanced_band(ell, Fraction(1, 8));
    for (int trial = 0; trial < 300; ++trial) {
        BitVector v(n * n);
        for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() % 3 == 0);
        BitVector t(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) t.set(c * n + r, v.get(r * n + c));

        std::vector<std::size_t> strided_viol;
        for (std::size_t i = 0; i + (ell - 1) * n < n * n; ++i) {
            std::int64_t w = 0;
            for (std::size_t k = 0; k < static_cast<std::size_t>(ell); ++k)
                w += v.get(i + k * n);
            if (!band.contains(w)) strided_viol.push_back(i);
        }
        std::vector<std::size_t> transpose_viol;
        for (std::size_t s = 0; s + ell <= n * n; ++s) {
            if (s % n + ell > n) continue; // crosses a transposed row boundary
            std::int64_t w = 0;
            for (std::size_t k = 0; k < static_cast<std::size_t>(ell); ++k) w += t.get(s + k);
            if (!band.contains(w)) transpose_viol.push_back((s % n) * n + s / n);
        }
        std::sort(transpose_viol.begin(), transpose_viol.end());
        CHECK(strided_viol == transpose_viol);

        const auto hit = scan_violation(v, ell, band, n);
        if (strided_viol.empty())
            CHECK(!hit.has_value());
        else
            CHECK(hit == strided_viol.front());
    }
}
