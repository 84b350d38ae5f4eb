#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>

#include "rlemaw/bounds.hpp"
#include "rlemaw/repr.hpp"
#include "rlemaw/text.hpp"

namespace py = pybind11;
using namespace rlemaw;

namespace {

std::vector<Symbol> to_symbols(const std::string& text) { return utf8_to_symbols(text); }

std::vector<Symbol> alphabet_or_empty(const std::optional<std::string>& alphabet) {
    return alphabet ? utf8_to_symbols(*alphabet) : std::vector<Symbol>{};
}

std::uint32_t mask_of(const std::optional<std::vector<int>>& types) {
    if (!types) return kAllTypes;
    std::uint32_t mask = 0;
    for (int t : *types) {
        if (t < 1 || t > 5) throw py::value_error("type ids are 1..5");
        mask |= type_bit(t);
    }
    return mask;
}

py::list rle_pairs(const RleString& rle) {
    py::list out;
    for (const Run& r : rle.runs()) {
        out.append(py::make_tuple(symbols_to_utf8(std::vector<Symbol>{r.symbol}), r.exponent));
    }
    return out;
}

py::dict counts_dict(const std::array<std::uint64_t, 6>& counts) {
    py::dict d;
    for (int t = 1; t <= 5; ++t) {
        d[py::str("m" + std::to_string(t))] = counts[static_cast<std::size_t>(t)];
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "minimal absent words over run-length encoded text";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InvalidHandle>(m, "InvalidHandle", PyExc_ValueError);
    py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_AssertionError);

    m.def(
        "encode",
        [](const std::string& text) { return rle_pairs(RleString::encode(to_symbols(text))); },
        py::arg("text"), "Run-length encode a string into (symbol, exponent) pairs.");

    m.def(
        "decode",
        [](const std::vector<std::pair<std::string, std::uint64_t>>& runs) {
            RleString rle;
            for (const auto& [sym, exp] : runs) {
                const auto symbols = utf8_to_symbols(sym);
                if (symbols.size() != 1) throw py::value_error("run symbols are single characters");
                rle.append(symbols[0], exp);
            }
            return symbols_to_utf8(rle.decode());
        },
        py::arg("runs"), "Expand (symbol, exponent) pairs back into a string.");

    m.def(
        "maws",
        [](const std::string& text, const std::optional<std::string>& alphabet,
           const std::optional<std::vector<int>>& types) {
            const ReprBundle bundle =
                build(RleString::encode(to_symbols(text)), alphabet_or_empty(alphabet));
            py::list out;
            for (const auto& rec : enumerate_records(bundle, mask_of(types))) {
                out.append(py::make_tuple(rec.type_id, symbols_to_utf8(rec.word)));
            }
            return out;
        },
        py::arg("text"), py::arg("alphabet") = std::nullopt, py::arg("types") = std::nullopt,
        "Enumerate all minimal absent words as (type, word) tuples.");

    m.def(
        "maws_bruteforce",
        [](const std::string& text, const std::optional<std::string>& alphabet) {
            const auto symbols = to_symbols(text);
            const auto sigma =
                alphabet ? utf8_to_symbols(*alphabet) : occurring_symbols(symbols);
            py::list out;
            for (const auto& rec : maws_bruteforce(symbols, sigma)) {
                out.append(py::make_tuple(rec.type_id, symbols_to_utf8(rec.word)));
            }
            return out;
        },
        py::arg("text"), py::arg("alphabet") = std::nullopt,
        "Reference enumeration by brute force (desk-scale inputs).");

    m.def(
        "stats",
        [](const std::string& text, const std::optional<std::string>& alphabet) {
            const RleString rle = RleString::encode(to_symbols(text));
            const ReprBundle bundle = build(rle, alphabet_or_empty(alphabet));
            py::dict d;
            d["n"] = rle.length();
            d["m"] = rle.run_count();
            d["sigma_prime"] = bundle.sigma_prime.size();
            d["counts"] = counts_dict(bundle.counts);
            d["X"] = bundle.x_value;
            d["W_size"] = bundle.w_count;
            d["space_words"] = space_words(bundle).total();
            return d;
        },
        py::arg("text"), py::arg("alphabet") = std::nullopt,
        "Per-type counts and structure sizes.");

    m.def(
        "verify",
        [](const std::string& text, const std::optional<std::string>& alphabet,
           std::uint64_t max_n) {
            const auto symbols = to_symbols(text);
            if (symbols.size() > max_n) {
                throw py::value_error("text longer than max_n; the oracle is quadratic");
            }
            const RleString rle = RleString::encode(symbols);
            const ReprBundle bundle = build(rle, alphabet_or_empty(alphabet));
            std::multiset<std::pair<int, std::vector<Symbol>>> got, want;
            for (const auto& rec : enumerate_records(bundle)) {
                got.insert({rec.type_id, rec.word});
            }
            for (const auto& rec : maws_bruteforce(symbols, bundle.alphabet)) {
                want.insert({rec.type_id, rec.word});
            }
            py::dict d;
            d["match"] = got == want;
            d["counts"] = counts_dict(bundle.counts);
            return d;
        },
        py::arg("text"), py::arg("alphabet") = std::nullopt, py::arg("max_n") = 4096,
        "Compare the compressed enumeration with the brute-force oracle.");

    m.def(
        "gen_family",
        [](const std::string& kind, std::uint64_t size) {
            return symbols_to_utf8(gen_family({family_kind_from_name(kind), size}));
        },
        py::arg("kind"), py::arg("size"),
        "Generate a lower-bound family string (m2-perm, m3-run, m4-grid, m5-stairs).");

    m.def(
        "audit",
        [](const std::string& text, bool cross_check_oracle) {
            const auto report = audit_bounds(RleString::encode(to_symbols(text)), {},
                                             cross_check_oracle);
            py::dict d;
            d["n"] = report.n;
            d["m"] = report.m;
            d["sigma_prime"] = report.sigma_prime;
            d["counts"] = counts_dict(report.counts);
            d["X"] = report.x_value;
            d["ok"] = report.ok;
            py::dict slacks;
            for (const auto& s : report.slacks) slacks[py::str(s.check)] = s.ratio;
            d["bound_slacks"] = slacks;
            return d;
        },
        py::arg("text"), py::arg("cross_check_oracle") = false,
        "Check every counting bound; raises on violation.");
}
