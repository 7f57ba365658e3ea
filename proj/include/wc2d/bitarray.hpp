#pragma once

#include <string>
#include <vector>

#include "wc2d/bitvec.hpp"

namespace wc2d {

// Row-major bit grid. Row and column accessors return value snapshots;
// writers replace whole slices.
class BitArray {
public:
    BitArray() = default;
    BitArray(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols) {}

    static BitArray unflatten(const BitVector& v, std::size_t rows, std::size_t cols);
    BitVector flatten() const { return bits_; }

    // Rows given as "0110"-style strings, one per row.
    static BitArray from_strings(const std::vector<std::string>& rows);
    std::string to_string() const; // rows joined with '\n'

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return bits_.get(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, bool v) { bits_.set(r * cols_ + c, v); }

    BitVector row(std::size_t r) const { return bits_.slice(r * cols_, cols_); }
    BitVector col(std::size_t c) const { return bits_.gather(c, cols_, rows_); }
    BitVector row_prefix(std::size_t r, std::size_t n) const { return bits_.slice(r * cols_, n); }
    BitVector col_prefix(std::size_t c, std::size_t n) const { return bits_.gather(c, cols_, n); }

    void set_row(std::size_t r, const BitVector& v);
    void set_col(std::size_t c, const BitVector& v);
    void set_row_prefix(std::size_t r, const BitVector& v);
    void set_col_prefix(std::size_t c, const BitVector& v);

    std::int64_t row_weight(std::size_t r) const { return row(r).weight(); }
    std::int64_t col_weight(std::size_t c) const {
        std::int64_t w = 0;
        for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
        return w;
    }

    // Weight of the sub-block [r0, r0+h) x [c0, c0+w).
    std::int64_t block_weight(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;

    bool operator==(const BitArray& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    BitVector bits_;
};

} // namespace wc2d
