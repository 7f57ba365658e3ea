#include "wc2d/container.hpp"

#include <istream>
#include <ostream>

namespace wc2d {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(std::istream& in) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        const int c = in.get();
        if (c < 0) throw CorruptContainer("container: truncated header");
        v |= static_cast<std::uint32_t>(c) << (8 * i);
    }
    return v;
}
std::uint64_t get_u64(std::istream& in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        const int c = in.get();
        if (c < 0) throw CorruptContainer("container: truncated header");
        v |= static_cast<std::uint64_t>(c) << (8 * i);
    }
    return v;
}

} // namespace

void write_container(std::ostream& out, const Container& c) {
    out.write("WC2D", 4);
    out.put(1);
    out.put(static_cast<char>(c.params.mode));
    put_u32(out, static_cast<std::uint32_t>(c.params.n));
    put_u32(out, static_cast<std::uint32_t>(c.params.m));
    const bool has_p = c.params.p.num != 0 || c.params.p.den != 1;
    const bool has_e = c.params.eps.num != 0 || c.params.eps.den != 1;
    put_u32(out, has_p ? static_cast<std::uint32_t>(c.params.p.num) : 0);
    put_u32(out, has_p ? static_cast<std::uint32_t>(c.params.p.den) : 0);
    put_u32(out, has_e ? static_cast<std::uint32_t>(c.params.eps.num) : 0);
    put_u32(out, has_e ? static_cast<std::uint32_t>(c.params.eps.den) : 0);
    put_u64(out, c.arrays.size());
    for (const BitArray& a : c.arrays) {
        const BitVector bits = a.flatten();
        std::uint8_t byte = 0;
        int fill = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            byte = static_cast<std::uint8_t>((byte << 1) | (bits.get(i) ? 1 : 0));
            if (++fill == 8) {
                out.put(static_cast<char>(byte));
                byte = 0;
                fill = 0;
            }
        }
        if (fill) out.put(static_cast<char>(byte << (8 - fill)));
    }
}

Container read_container(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::string(magic, 4) != "WC2D")
        throw CorruptContainer("container: bad magic");
    const int version = in.get();
    if (version != 1) throw CorruptContainer("container: unsupported version");
    const int mode_byte = in.get();
    if (mode_byte < 0 || mode_byte > 5) throw CorruptContainer("container: bad mode");
    Container c;
    c.params.mode = static_cast<Mode>(mode_byte);
    c.params.n = get_u32(in);
    c.params.m = get_u32(in);
    const std::uint32_t pn = get_u32(in), pd = get_u32(in);
    const std::uint32_t en = get_u32(in), ed = get_u32(in);
    if (pd) c.params.p = Fraction(pn, pd);
    else if (pn) throw CorruptContainer("container: bad p field");
    if (ed) c.params.eps = Fraction(en, ed);
    else if (en) throw CorruptContainer("container: bad eps field");
    const std::uint64_t count = get_u64(in);
    if (c.params.n == 0 || c.params.n > 65536)
        throw CorruptContainer("container: bad array size");
    const std::size_t n = c.params.n;
    const std::size_t bytes_per_array = (n * n + 7) / 8;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        BitVector bits(n * n);
        for (std::size_t b = 0; b < bytes_per_array; ++b) {
            const int ch = in.get();
            if (ch < 0) throw CorruptContainer("container: truncated array data");
            for (int j = 0; j < 8; ++j) {
                const std::size_t i = b * 8 + static_cast<std::size_t>(j);
                if (i < n * n && ((ch >> (7 - j)) & 1)) bits.set(i, true);
            }
        }
        c.arrays.push_back(BitArray::unflatten(bits, n, n));
    }
    return c;
}

BitVector bytes_to_bits(const std::vector<std::uint8_t>& bytes) {
    BitVector v(bytes.size() * 8);
    for (std::size_t b = 0; b < bytes.size(); ++b)
        for (int j = 0; j < 8; ++j)
            if ((bytes[b] >> (7 - j)) & 1) v.set(b * 8 + static_cast<std::size_t>(j), true);
    return v;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits) {
    if (bits.size() % 8 != 0) throw std::invalid_argument("bits_to_bytes: not byte aligned");
    std::vector<std::uint8_t> out(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return out;
}

BitVector pad_to_blocks(const BitVector& bits, std::int64_t block) {
    BitVector v = bits;
    v.push_back(true);
    while (v.size() % static_cast<std::size_t>(block) != 0) v.push_back(false);
    return v;
}

BitVector strip_padding(const BitVector& bits) {
    std::size_t end = bits.size();
    while (end > 0 && !bits.get(end - 1)) --end;
    if (end == 0) throw CorruptContainer("padding: no terminator bit");
    return bits.slice(0, end - 1);
}

} // namespace wc2d
