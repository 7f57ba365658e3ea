#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wc2d/antipodal.hpp"
#include "wc2d/balance.hpp"
#include "wc2d/codecs.hpp"
#include "wc2d/container.hpp"
#include "wc2d/errors.hpp"
#include "wc2d/forbidden.hpp"
#include "wc2d/verify.hpp"

using nlohmann::json;
using namespace wc2d;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCorrupt = 3;
constexpr int kExitIo = 4;

Fraction parse_fraction(const std::string& s, const char* what) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            const long long v = std::stoll(s);
            return Fraction(v, 1);
        }
        return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InfeasibleParams(std::string(what) + ": expected a rational A/B");
    }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw std::ios_base::failure("read error on " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::ios_base::failure("write error on " + path);
}

struct Options {
    std::string mode_name;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::string p_str;
    std::string eps_str;
    std::string in_path;
    std::string out_path;
    double window_alpha = 0.0;
    bool has_alpha = false;
    bool as_json = false;
};

CodecParams to_params(const Options& o) {
    const auto mode = mode_from_name(o.mode_name);
    if (!mode) throw InfeasibleParams("unknown mode '" + o.mode_name + "'");
    CodecParams prm;
    prm.mode = *mode;
    prm.n = o.n;
    prm.m = o.m;
    if (!o.p_str.empty()) prm.p = parse_fraction(o.p_str, "--p");
    if (!o.eps_str.empty()) prm.eps = parse_fraction(o.eps_str, "--epsilon");
    if (o.has_alpha) prm.window_alpha = o.window_alpha;
    return prm;
}

int cmd_encode(const Options& o) {
    const CodecParams prm = to_params(o);
    const auto codec = make_codec(prm);
    const auto bytes = read_file(o.in_path);
    const BitVector padded = pad_to_blocks(bytes_to_bits(bytes), codec->message_bits());
    Container c;
    c.params = prm;
    const std::size_t nblk = padded.size() / static_cast<std::size_t>(codec->message_bits());
    for (std::size_t i = 0; i < nblk; ++i)
        c.arrays.push_back(codec->encode(
            padded.slice(i * static_cast<std::size_t>(codec->message_bits()),
                         static_cast<std::size_t>(codec->message_bits()))));
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + o.out_path);
    write_container(out, c);
    if (!out) throw std::ios_base::failure("write error on " + o.out_path);
    std::cerr << "encoded " << bytes.size() << " bytes into " << nblk << " array(s) of "
              << codec->n() << "x" << codec->n() << " (" << codec->redundancy()
              << " redundant bits per array)\n";
    return 0;
}

int cmd_decode(const Options& o) {
    std::ifstream in(o.in_path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + o.in_path);
    const Container c = read_container(in);
    const auto codec = make_codec(c.params);
    BitVector bits;
    for (const BitArray& a : c.arrays) bits.append(codec->decode(a));
    const BitVector stripped = strip_padding(bits);
    if (stripped.size() % 8 != 0)
        throw CorruptContainer("decoded payload is not byte aligned");
    write_file(o.out_path, bits_to_bytes(stripped));
    std::cerr << "decoded " << c.arrays.size() << " array(s) into " << stripped.size() / 8
              << " bytes\n";
    return 0;
}

int cmd_verify(const Options& o) {
    std::ifstream in(o.in_path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + o.in_path);
    const Container c = read_container(in);
    const auto codec = make_codec(c.params);
    const ConstraintSpec spec = codec->constraint();
    json out = json::array();
    bool all_pass = true;
    for (std::size_t i = 0; i < c.arrays.size(); ++i) {
        const ConstraintReport rep = check(c.arrays[i], spec);
        all_pass = all_pass && rep.pass;
        if (o.as_json) {
            out.push_back({{"array", i},
                           {"pass", rep.pass},
                           {"detail", rep.describe()},
                           {"margin_lo", rep.margin_lo},
                           {"margin_hi", rep.margin_hi}});
        } else {
            std::cout << "array " << i << ": " << rep.describe() << "\n";
        }
    }
    if (o.as_json) std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : kExitViolation;
}

int cmd_stats(const Options& o) {
    CodecParams prm;
    if (!o.in_path.empty()) {
        std::ifstream in(o.in_path, std::ios::binary);
        if (!in) throw std::ios_base::failure("cannot open " + o.in_path);
        prm = read_container(in).params;
    } else {
        prm = to_params(o);
    }
    const auto codec = make_codec(prm);
    const std::int64_t n = codec->n();
    std::string formula;
    std::int64_t reference = codec->redundancy();
    switch (prm.mode) {
        case Mode::RcBoundedDc: formula = "n*lambda(n,p) + O(n log n)"; break;
        case Mode::RcBoundedSrt: formula = "n + 3"; reference = n + 3; break;
        case Mode::RcBalancedDc: {
            const DcBalancedCodec ref(prm.n, prm.eps);
            const std::int64_t cc = ref.suffix_bits();
            formula = "3cn - 2c^2 with c = " + std::to_string(cc);
            reference = 3 * cc * n - 2 * cc * cc;
            break;
        }
        case Mode::RcBalancedSrt: formula = "1"; reference = 1; break;
        case Mode::SubBounded: formula = "n"; reference = n; break;
        case Mode::SubBalanced: formula = "1"; reference = 1; break;
    }
    if (o.as_json) {
        std::cout << json({{"mode", mode_name(prm.mode)},
                           {"n", n},
                           {"message_bits", codec->message_bits()},
                           {"redundancy", codec->redundancy()},
                           {"rate", static_cast<double>(codec->message_bits()) / (n * n)},
                           {"reference_formula", formula},
                           {"reference_bits", reference}})
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "mode:         " << mode_name(prm.mode) << "\n"
                  << "array:        " << n << "x" << n << "\n"
                  << "payload bits: " << codec->message_bits() << "\n"
                  << "redundancy:   " << codec->redundancy() << " bits (reference " << formula
                  << " = " << reference << ")\n"
                  << "rate:         "
                  << static_cast<double>(codec->message_bits()) / (static_cast<double>(n) * n)
                  << "\n";
    }
    return 0;
}

int cmd_selftest() {
    std::mt19937_64 rng(2024);
    // Antipodal matching properties, exhaustive then sampled.
    for (std::size_t len = 1; len <= 12; ++len) {
        for (std::uint64_t v = 0; v < (1ull << len); ++v) {
            BitVector x(len);
            for (std::size_t i = 0; i < len; ++i)
                if ((v >> i) & 1) x.set(i, true);
            const BitVector y = antipodal_map(x);
            if (y.weight() != static_cast<std::int64_t>(len) - x.weight()) return 1;
            if (!(antipodal_map(y) == x)) return 1;
            if (2 * x.weight() > static_cast<std::int64_t>(len))
                for (std::size_t i = 0; i < len; ++i)
                    if (y.get(i) && !x.get(i)) return 1;
        }
    }
    for (int trial = 0; trial < 2000; ++trial) {
        BitVector x(255);
        for (std::size_t i = 0; i < 255; ++i) x.set(i, rng() & 1);
        const BitVector y = antipodal_map(x);
        if (y.weight() != 255 - x.weight() || !(antipodal_map(y) == x)) return 1;
    }
    // Swap existence, exhaustive small cases.
    for (std::int64_t m = 1; m <= 5; ++m)
        for (std::uint64_t v = 0; v < (1ull << (2 * m)); ++v) {
            BitVector y(static_cast<std::size_t>(m)), z(static_cast<std::size_t>(m));
            for (std::int64_t i = 0; i < m; ++i) {
                y.set(static_cast<std::size_t>(i), (v >> i) & 1);
                z.set(static_cast<std::size_t>(i), (v >> (m + i)) & 1);
            }
            const Fraction p(1, 2);
            const std::int64_t cap = p.floor_mul(m);
            if (y.weight() + z.weight() <= 2 * cap && !swap_index_capped(y, z, cap)) return 1;
        }
    // Psi bijection on a small space.
    {
        const ForbiddenSpace fs(6, WeightBand{2, 4}, 4);
        if (fs.cardinality() != 14) return 1;
        for (std::int64_t j = 0; j < 14; ++j)
            if (fs.rank_value(fs.unrank_value(j)) != j) return 1;
    }
    // Census fixtures.
    if (census(ConstraintSpec::rc_bounded(2, Fraction(1, 2))) != 7) return 1;
    if (census(ConstraintSpec::rc_balanced(2, Fraction(0, 1))) != 2) return 1;
    std::cout << "selftest: all checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D weight-constrained binary array codec"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_params) {
        if (with_params) {
            sub->add_option("--mode", o.mode_name,
                            "rc-bounded-dc | rc-bounded-srt | rc-balanced-dc | rc-balanced-srt | "
                            "sub-bounded | sub-balanced");
            sub->add_option("--n", o.n, "array side length");
            sub->add_option("--m", o.m, "subarray side length (sub-* modes)");
            sub->add_option("--p", o.p_str, "weight bound as a rational A/B");
            sub->add_option("--epsilon", o.eps_str, "balance slack as a rational A/B");
            sub->add_option("--window-alpha", o.window_alpha,
                            "window length multiplier override for rc-balanced-srt")
                ->each([&](const std::string&) { o.has_alpha = true; });
        }
        sub->add_option("--in", o.in_path, "input path");
        sub->add_option("--out", o.out_path, "output path");
        sub->add_flag("--json", o.as_json, "machine-readable reports");
    };

    CLI::App* enc = app.add_subcommand("encode", "encode a file into constrained arrays");
    add_common(enc, true);
    CLI::App* dec = app.add_subcommand("decode", "decode a container back to the original file");
    add_common(dec, false);
    CLI::App* ver = app.add_subcommand("verify", "check every array against its constraint");
    add_common(ver, false);
    CLI::App* sta = app.add_subcommand("stats", "report payload and redundancy figures");
    add_common(sta, true);
    app.add_subcommand("selftest", "run the built-in oracle battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(o);
        if (dec->parsed()) return cmd_decode(o);
        if (ver->parsed()) return cmd_verify(o);
        if (sta->parsed()) return cmd_stats(o);
        return cmd_selftest();
    } catch (const InfeasibleParams& e) {
        std::cerr << "infeasible parameters: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CorruptContainer& e) {
        std::cerr << "corrupt container: " << e.what() << "\n";
        return kExitCorrupt;
    } catch (const DecodingError& e) {
        std::cerr << "corrupt container: " << e.what() << "\n";
        return kExitCorrupt;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
}
