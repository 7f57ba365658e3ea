#pragma once

#include <stdexcept>
#include <string>

namespace wc2d {

// Parameters fail a feasibility requirement; the message names the inequality.
struct InfeasibleParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The encoder reached a state the construction is supposed to preclude.
struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The input word is not a codeword of the expected shape.
struct DecodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wc2d
