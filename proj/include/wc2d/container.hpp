#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wc2d/bitarray.hpp"
#include "wc2d/codecs.hpp"

namespace wc2d {

// File layout (little-endian integers, bit-exact):
//   magic "WC2D" | version u8 = 1 | mode u8 | n u32 | m u32 (0 if unused)
//   | p num u32 | p den u32 (0/0 if unused) | eps num u32 | eps den u32
//   | array count u64 | arrays, each row-major, bits packed big-endian within
//   bytes and padded to a byte boundary.
struct Container {
    CodecParams params;
    std::vector<BitArray> arrays;
};

struct CorruptContainer : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_container(std::ostream& out, const Container& c);
Container read_container(std::istream& in);

// Byte stream <-> bit stream (MSB first within each byte).
BitVector bytes_to_bits(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits); // |bits| % 8 == 0

// Self-delimiting payload padding: append 1 then zeros up to a multiple of
// `block`; strip removes everything from the last 1 on.
BitVector pad_to_blocks(const BitVector& bits, std::int64_t block);
BitVector strip_padding(const BitVector& bits);

} // namespace wc2d
