#include "wc2d/antipodal.hpp"

namespace wc2d {

BracketMatching BracketMatching::analyze(const BitVector& x) {
    BracketMatching m;
    m.length = x.size();
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.get(i)) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            m.matched_pairs.emplace_back(stack.back(), i);
            stack.pop_back();
        } else {
            m.unmatched_zeros.push_back(i);
        }
    }
    m.unmatched_ones = std::move(stack);
    return m;
}

BitVector antipodal_map(const BitVector& x) {
    // Free positions (ascending: zeros then ones); assign ones to the last
    // a slots where a = #free zeros, so the free-one count flips from b to a.
    std::vector<std::size_t> stack;
    std::vector<std::size_t> free_zeros;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.get(i)) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            stack.pop_back();
        } else {
            free_zeros.push_back(i);
        }
    }
    const std::size_t a = free_zeros.size();
    const std::size_t b = stack.size();
    BitVector y = x;
    if (b > a) {
        for (std::size_t j = 0; j < b - a; ++j) y.set(stack[j], false);
    } else if (a > b) {
        for (std::size_t j = b; j < a; ++j) y.set(free_zeros[j], true);
    }
    return y;
}

} // namespace wc2d
