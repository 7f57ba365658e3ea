#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "wc2d/bitarray.hpp"
#include "wc2d/fraction.hpp"

namespace wc2d {

enum class ConstraintFamily { RcBounded, RcBalanced, SubBounded, SubBalanced };

struct ConstraintSpec {
    ConstraintFamily family;
    std::int64_t n = 0;
    std::int64_t m = 0; // subarray families only
    Fraction p;         // bounded families
    Fraction eps;       // balanced families

    static ConstraintSpec rc_bounded(std::int64_t n, Fraction p) {
        return {ConstraintFamily::RcBounded, n, 0, p, {}};
    }
    static ConstraintSpec rc_balanced(std::int64_t n, Fraction eps) {
        return {ConstraintFamily::RcBalanced, n, 0, {}, eps};
    }
    static ConstraintSpec sub_bounded(std::int64_t n, std::int64_t m, Fraction p) {
        return {ConstraintFamily::SubBounded, n, m, p, {}};
    }
    static ConstraintSpec sub_balanced(std::int64_t n, std::int64_t m, Fraction eps) {
        return {ConstraintFamily::SubBalanced, n, m, {}, eps};
    }

    // Admitted weights for one line (length n) or one m x m subarray.
    WeightBand line_band() const;
};

struct Violation {
    enum class Kind { Row, Column, Subarray };
    Kind kind;
    std::int64_t index_row = 0; // row index, column index, or subarray corner
    std::int64_t index_col = 0;
    std::int64_t weight = 0;
};

struct ConstraintReport {
    bool pass = false;
    std::vector<std::int64_t> row_weights;    // RC families
    std::vector<std::int64_t> col_weights;    // RC families
    std::optional<Violation> first_violation;
    std::int64_t margin_lo = 0; // min over checked units of (weight - band.lo)
    std::int64_t margin_hi = 0; // min over checked units of (band.hi - weight)
    std::string describe() const;
};

ConstraintReport check(const BitArray& a, const ConstraintSpec& spec);

// Exact member count of the family set by exhaustive enumeration (n <= 5).
mpz_class census(const ConstraintSpec& spec);

} // namespace wc2d
