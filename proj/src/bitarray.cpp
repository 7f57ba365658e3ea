#include "wc2d/bitarray.hpp"

#include <stdexcept>

namespace wc2d {

BitArray BitArray::unflatten(const BitVector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
    BitArray a;
    a.rows_ = rows;
    a.cols_ = cols;
    a.bits_ = v;
    return a;
}

BitArray BitArray::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitArray a(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != a.cols_) throw std::invalid_argument("from_strings: ragged rows");
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (rows[r][c] == '1') a.set(r, c, true);
            else if (rows[r][c] != '0') throw std::invalid_argument("from_strings: expected 0/1");
        }
    }
    return a;
}

std::string BitArray::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += '\n';
        s += row(r).to_string();
    }
    return s;
}

void BitArray::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) bits_.set(r * cols_ + c, v.get(c));
}

void BitArray::set_col(std::size_t c, const BitVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) bits_.set(r * cols_ + c, v.get(r));
}

void BitArray::set_row_prefix(std::size_t r, const BitVector& v) {
    if (v.size() > cols_) throw std::invalid_argument("set_row_prefix: size mismatch");
    for (std::size_t c = 0; c < v.size(); ++c) bits_.set(r * cols_ + c, v.get(c));
}

void BitArray::set_col_prefix(std::size_t c, const BitVector& v) {
    if (v.size() > rows_) throw std::invalid_argument("set_col_prefix: size mismatch");
    for (std::size_t r = 0; r < v.size(); ++r) bits_.set(r * cols_ + c, v.get(r));
}

std::int64_t BitArray::block_weight(std::size_t r0, std::size_t c0, std::size_t h,
                                    std::size_t w) const {
    std::int64_t s = 0;
    for (std::size_t r = r0; r < r0 + h; ++r)
        s += bits_.slice(r * cols_ + c0, w).weight();
    return s;
}

} // namespace wc2d
