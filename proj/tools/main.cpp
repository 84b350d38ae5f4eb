#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlemaw/bounds.hpp"
#include "rlemaw/repr.hpp"
#include "rlemaw/text.hpp"

using namespace rlemaw;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open input: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_all(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output: " + path);
    out << data;
}

bool looks_like_rle(const std::string& path) {
    return path.size() >= 4 && path.ends_with(".rle");
}

// Analysis commands accept both plain text and .rle token files; their plain
// text may end with one newline that is not part of the data. encode/decode
// work on the exact bytes.
RleString load_input(const std::string& path, bool bytes, bool strip_newline) {
    std::string data = read_all(path);
    if (looks_like_rle(path)) return tokens_to_rle(data);
    if (strip_newline && !data.empty() && data.back() == '\n') {
        data.pop_back();
        if (!data.empty() && data.back() == '\r') data.pop_back();
    }
    return RleString::encode(bytes ? bytes_to_symbols(data) : utf8_to_symbols(data));
}

std::vector<Symbol> parse_alphabet(const std::string& alphabet, bool bytes) {
    return bytes ? bytes_to_symbols(alphabet) : utf8_to_symbols(alphabet);
}

std::uint32_t mask_of(const std::vector<int>& types) {
    if (types.empty()) return kAllTypes;
    std::uint32_t mask = 0;
    for (int t : types) {
        if (t < 1 || t > 5) throw CLI::ValidationError("--types", "type ids are 1..5");
        mask |= type_bit(t);
    }
    return mask;
}

ordered_json rle_json(const RleString& rle) {
    ordered_json arr = ordered_json::array();
    for (const Run& r : rle.runs()) {
        arr.push_back({symbols_to_utf8(std::vector<Symbol>{r.symbol}), r.exponent});
    }
    return arr;
}

struct MawPrinter {
    std::string format = "text";
    bool refs = false;
    std::ostream& out;
    const RleString& rle;
    std::vector<Run> buffer;

    void operator()(const MawHandle& h) {
        if (refs && format != "jsonl") {
            out << to_fields(h) << '\n';
            return;
        }
        if (format == "jsonl") {
            ordered_json obj;
            obj["type"] = h.type_id;
            if (refs) {
                obj["ref"] = {h.type_id, h.lead_symbol, h.lead_count,
                              h.run_index, h.run_span, h.tail_exponent};
            } else {
                expand_into(h, rle, buffer);
                const RleString w = RleString::from_runs(buffer);
                obj["maw"] = symbols_to_utf8(w.decode());
                obj["rle"] = rle_json(w);
                obj["len"] = w.length();
            }
            out << obj.dump() << '\n';
            return;
        }
        expand_into(h, rle, buffer);
        const RleString w = RleString::from_runs(buffer);
        if (format == "rle") {
            out << rle_to_tokens(w) << '\n';
        } else {
            out << symbols_to_utf8(w.decode()) << '\n';
        }
    }
};

ordered_json stats_json(const RleString& rle, std::span<const Symbol> alphabet) {
    const ReprBundle bundle = build(rle, alphabet);
    const SpaceReport space = space_words(bundle);
    const BoundReport report = audit_bundle(bundle, false, 4096, /*strict=*/false);

    ordered_json j;
    j["n"] = rle.length();
    j["m"] = rle.run_count();
    j["sigma_prime"] = bundle.sigma_prime.size();
    ordered_json counts;
    for (int t = 1; t <= 5; ++t) {
        counts["m" + std::to_string(t)] = bundle.counts[static_cast<std::size_t>(t)];
    }
    j["counts"] = counts;
    j["X"] = bundle.x_value;
    j["W_size"] = bundle.w_count;
    ordered_json sp;
    sp["rle"] = space.rle;
    sp["alphabet"] = space.alphabet;
    sp["d1"] = space.d1;
    sp["d2"] = space.d2;
    sp["d3"] = space.d3;
    sp["d4"] = space.d4;
    sp["d5"] = space.d5;
    sp["total"] = space.total();
    j["space_words"] = sp;
    ordered_json slacks;
    for (const BoundSlack& s : report.slacks) slacks[s.check] = s.ratio;
    j["bound_slacks"] = slacks;
    return j;
}

int cmd_verify(const RleString& rle, std::span<const Symbol> alphabet, std::uint64_t max_n,
               bool corrupt) {
    const std::uint64_t n = rle.length();
    if (n > max_n) {
        std::cerr << "input has n=" << n << " > --max-n=" << max_n
                  << "; the brute-force oracle is quadratic, raise the cap only deliberately\n";
        return kExitInput;
    }
    const ReprBundle bundle = build(rle, alphabet);
    auto enumerated = enumerate_records(bundle);
    if (corrupt && !enumerated.empty()) enumerated.pop_back();  // fault-injection hook

    const std::vector<Symbol> text = rle.decode();
    const auto expected = maws_bruteforce(text, bundle.alphabet);

    std::array<std::uint64_t, 6> got{}, want{};
    std::set<std::pair<int, std::vector<Symbol>>> got_set, want_set;
    for (const auto& r : enumerated) {
        got[static_cast<std::size_t>(r.type_id)]++;
        got_set.insert({r.type_id, r.word});
    }
    for (const auto& r : expected) {
        want[static_cast<std::size_t>(r.type_id)]++;
        want_set.insert({r.type_id, r.word});
    }
    std::cout << "n=" << n << " m=" << rle.run_count()
              << " sigma_prime=" << bundle.sigma_prime.size() << '\n';
    auto print_counts = [](const char* label, const std::array<std::uint64_t, 6>& c) {
        std::cout << label;
        for (int t = 1; t <= 5; ++t) std::cout << " m" << t << "=" << c[static_cast<std::size_t>(t)];
        std::cout << '\n';
    };
    print_counts("enumerated:", got);
    print_counts("oracle:    ", want);
    if (got_set == want_set) {
        std::cout << "MATCH\n";
        return kExitOk;
    }
    std::cout << "MISMATCH\n";
    for (const auto& [t, w] : want_set) {
        if (!got_set.count({t, w})) {
            std::cout << "  missing (type " << t << "): " << symbols_to_utf8(w) << '\n';
        }
    }
    for (const auto& [t, w] : got_set) {
        if (!want_set.count({t, w})) {
            std::cout << "  spurious (type " << t << "): " << symbols_to_utf8(w) << '\n';
        }
    }
    return kExitMismatch;
}

int cmd_bench(const RleString& rle, std::span<const Symbol> alphabet, std::uint64_t repeat) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const ReprBundle bundle = build(rle, alphabet);
    const auto t1 = clock::now();

    std::uint64_t checksum = 0;
    std::uint64_t enum_ns_total = 0;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < repeat; ++i) {
        count = 0;
        const auto s = clock::now();
        enumerate_all(bundle, [&](const MawHandle& h) {
            checksum += h.lead_count + h.run_index;
            ++count;
        });
        const auto e = clock::now();
        enum_ns_total +=
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(e - s).count());
    }
    const std::uint64_t build_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    const std::uint64_t enum_ns = enum_ns_total / repeat;

    std::cout << "n=" << rle.length() << " m=" << rle.run_count() << " maws=" << count
              << " (checksum " << (checksum & 0xff) << ")\n";
    std::cout << "build_ns=" << build_ns << '\n';
    std::cout << "enum_ns=" << enum_ns << " repeat=" << repeat << '\n';
    std::cout << "ns_per_maw=" << (count ? enum_ns / count : 0) << '\n';
    std::cout << "space_words=" << space_words(bundle).total() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal absent words over run-length encoded text"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string alphabet_str;
    bool bytes = false;

    auto add_common = [&](CLI::App* cmd, bool with_alphabet) {
        cmd->add_option("input", input, "input file, '-' for stdin, '.rle' for token files");
        cmd->add_flag("--bytes", bytes, "treat input as raw bytes, one symbol per byte");
        if (with_alphabet) {
            cmd->add_option("--alphabet", alphabet_str,
                            "explicit ordered alphabet (must cover the text)");
        }
    };

    auto* enc = app.add_subcommand("encode", "re-encode text as RLE tokens");
    add_common(enc, false);
    enc->add_option("-o,--output", output, "output path, '-' for stdout");

    auto* dec = app.add_subcommand("decode", "expand RLE tokens back to text");
    add_common(dec, false);
    dec->add_option("-o,--output", output, "output path, '-' for stdout");

    auto* maws = app.add_subcommand("maws", "enumerate all minimal absent words");
    add_common(maws, true);
    std::vector<int> types;
    std::string format = "text";
    bool refs = false;
    maws->add_option("--types", types, "type ids to enumerate (1..5)")->delimiter(',');
    maws->add_option("--format", format, "text | jsonl | rle")
        ->check(CLI::IsMember({"text", "jsonl", "rle"}));
    maws->add_flag("--refs", refs, "emit six-field handles instead of expanded words");

    auto* stats = app.add_subcommand("stats", "counts, structure sizes and bound slacks");
    add_common(stats, true);
    bool compact_json = false;
    stats->add_flag("--json", compact_json, "single-line JSON output");

    auto* verify = app.add_subcommand("verify", "cross-check enumeration against the oracle");
    add_common(verify, true);
    std::uint64_t max_n = 4096;
    if (const char* env = std::getenv("RLEMAW_ORACLE_LIMIT")) {
        max_n = std::strtoull(env, nullptr, 10);
    }
    verify->add_option("--max-n", max_n, "largest n the oracle will accept");
    bool corrupt = false;
    verify->add_flag("--corrupt", corrupt)->group("");  // fault-injection test hook

    auto* gen = app.add_subcommand("gen", "emit a lower-bound family string");
    std::string kind;
    std::uint64_t size = 0;
    bool gen_rle = false;
    gen->add_option("kind", kind, "m2-perm | m3-run | m4-grid | m5-stairs")->required();
    gen->add_option("size", size, "family size parameter")->required();
    gen->add_flag("--rle", gen_rle, "emit RLE tokens instead of plain text");

    auto* bench = app.add_subcommand("bench", "build/enumeration timings");
    add_common(bench, true);
    std::uint64_t repeat = 3;
    bench->add_option("--repeat", repeat, "enumeration repetitions");
    std::string probe_kind;
    std::vector<std::uint64_t> probe_sizes;
    std::string probe_measure = "time";
    bench->add_option("--probe", probe_kind,
                      "emit a scaling-probe CSV for a family instead of timing the input");
    bench->add_option("--sizes", probe_sizes, "family sizes for --probe")->delimiter(',');
    bench->add_option("--measure", probe_measure, "probe measurement: time | space")
        ->check(CLI::IsMember({"time", "space"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enc->parsed()) {
            const RleString rle = load_input(input, bytes, false);
            write_all(output, rle_to_tokens(rle) + "\n");
            return kExitOk;
        }
        if (dec->parsed()) {
            const RleString rle = tokens_to_rle(read_all(input));
            const auto symbols = rle.decode();
            write_all(output, bytes ? symbols_to_bytes(symbols) : symbols_to_utf8(symbols));
            return kExitOk;
        }

        const std::vector<Symbol> alphabet =
            alphabet_str.empty() ? std::vector<Symbol>{} : parse_alphabet(alphabet_str, bytes);

        if (maws->parsed()) {
            const RleString rle = load_input(input, bytes, true);
            const ReprBundle bundle = build(rle, alphabet);
            MawPrinter printer{format, refs, std::cout, bundle.rle, {}};
            enumerate_all(bundle, [&](const MawHandle& h) { printer(h); }, mask_of(types));
            return kExitOk;
        }
        if (stats->parsed()) {
            const RleString rle = load_input(input, bytes, true);
            const ordered_json j = stats_json(rle, alphabet);
            std::cout << (compact_json ? j.dump() : j.dump(2)) << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            return cmd_verify(load_input(input, bytes, true), alphabet, max_n, corrupt);
        }
        if (gen->parsed()) {
            std::vector<Symbol> text;
            try {
                text = gen_family({family_kind_from_name(kind), size});
            } catch (const InvalidInput& e) {
                std::cerr << e.what() << '\n';
                return kExitUsage;
            }
            if (gen_rle) {
                std::cout << rle_to_tokens(RleString::encode(text)) << '\n';
            } else {
                std::cout << symbols_to_utf8(text) << '\n';
            }
            return kExitOk;
        }
        if (bench->parsed()) {
            if (!probe_kind.empty()) {
                if (probe_sizes.empty()) {
                    std::cerr << "--probe needs --sizes\n";
                    return kExitUsage;
                }
                std::vector<FamilySpec> specs;
                try {
                    const FamilyKind kind = family_kind_from_name(probe_kind);
                    for (std::uint64_t s : probe_sizes) specs.push_back({kind, s});
                    std::cout << to_csv(scaling_probe(
                        specs, probe_measure == "space" ? Measure::Space : Measure::Time));
                } catch (const InvalidInput& e) {
                    std::cerr << e.what() << '\n';
                    return kExitUsage;
                }
                return kExitOk;
            }
            if (repeat == 0) {
                std::cerr << "--repeat must be >= 1\n";
                return kExitUsage;
            }
            return cmd_bench(load_input(input, bytes, true), alphabet, repeat);
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
