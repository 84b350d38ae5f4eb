#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "rlemaw/handle.hpp"
#include "rlemaw/ktree.hpp"
#include "rlemaw/oracle.hpp"
#include "rlemaw/rle.hpp"

namespace rlemaw {

/// Basic-operation counter threaded through the enumerators; used to check
/// the output-sensitivity contract (ops <= C * (|MAW| + m)).
struct OpCounter {
    std::uint64_t ops = 0;
    void tick(std::uint64_t n = 1) { ops += n; }
};

/// D1: the unique single-run MAW per occurring symbol.
struct D1Rep {
    std::vector<std::pair<Symbol, std::uint64_t>> longest_runs;  // (symbol, longest exponent)
};

/// D2: distinct ordered symbol pairs occurring adjacently, plus one run index
/// per occurring symbol so bigram MAWs can point at a witness run. The
/// explicit list is materialized when |M2| is small (see BuildOptions).
struct D2Rep {
    std::vector<std::pair<Symbol, Symbol>> adjacent_pairs;            // sorted
    std::vector<std::pair<Symbol, std::uint64_t>> run_of_symbol;      // sorted by symbol
    std::vector<MawHandle> explicit_list;
    bool use_explicit = false;
    std::uint64_t count = 0;
};

/// One 3-run bridge substring a·c^l·b (the middle symbol is implied by the
/// group); c_run is the real run index of a witness middle run, whose
/// successor run carries `right`.
struct D3Entry {
    Symbol left;
    std::uint64_t exponent;
    Symbol right;
    std::uint64_t c_run;
};

struct D3Group {
    Symbol middle;
    std::vector<D3Entry> entries;                                    // sorted by (exp, l, r)
    std::vector<std::pair<Symbol, std::uint64_t>> left_max;          // a -> max exponent
    // b -> (max exponent, witness run index of the maximizing middle run)
    std::vector<std::tuple<Symbol, std::uint64_t, std::uint64_t>> right_max;
};

struct D3Rep {
    std::vector<D3Group> groups;  // sorted by middle symbol
    std::vector<MawHandle> explicit_list;
    bool use_explicit = false;
    std::uint64_t count = 0;
};

struct D4Vertex {
    Symbol symbol;
    std::uint64_t exponent;
};

/// Bipartite graph over the left/right parts of K(w) for one bridge w with
/// |K(w)| >= 2. Vertices are sorted by exponent; each edge is one member of
/// K(w). right_witness[r] is the real run index of the second run (the
/// alpha-run) of an occurrence of some bridge incident to right vertex r;
/// window_span runs from there cover alpha^i .. u .. beta^j .. b.
struct D4Graph {
    std::vector<D4Vertex> left, right;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // sorted (l, r)
    std::vector<std::uint64_t> left_max_rexp;   // per left vertex: max neighbor exponent
    std::vector<std::uint64_t> right_max_lexp;  // per right vertex
    std::vector<std::uint64_t> right_witness;
    std::uint32_t window_span = 0;  // R(w) + 1
    std::uint64_t maw_count = 0;    // emissions with both end symbols in the alphabet
};

struct D4Rep {
    std::vector<D4Graph> graphs;
    std::vector<MawHandle> explicit_list;
    bool use_explicit = false;
    std::uint64_t count = 0;
};

/// D5: explicit deduplicated handles; |D5| <= 2(m+1).
struct D5Rep {
    std::vector<MawHandle> list;
};

struct SpaceReport {
    std::uint64_t rle = 0, alphabet = 0, d1 = 0, d2 = 0, d3 = 0, d4 = 0, d5 = 0;
    std::uint64_t total() const { return rle + alphabet + d1 + d2 + d3 + d4 + d5; }
};

struct BuildOptions {
    // M2/M3/M4 are additionally stored as explicit handle lists when their
    // count is <= explicit_factor * m. Enumeration output is identical either
    // way; this only trades words for per-item constants.
    double explicit_factor = 1.0;
};

/// The five per-type structures plus rle(T); storage linear in m.
struct ReprBundle {
    RleString rle;
    std::vector<Symbol> alphabet;     // enumeration order for M1
    std::vector<Symbol> sigma_prime;  // occurring symbols, sorted
    D1Rep d1;
    D2Rep d2;
    D3Rep d3;
    D4Rep d4;
    D5Rep d5;
    std::uint64_t x_value = 0;  // X over the K-tree
    std::uint64_t w_count = 0;  // |W|
    std::array<std::uint64_t, 6> counts{};

    std::uint64_t total_maws() const {
        return counts[1] + counts[2] + counts[3] + counts[4] + counts[5];
    }
};

/// Builds the bundle from rle(T). The alphabet must contain every occurring
/// symbol; when empty, the occurring symbols are used.
ReprBundle build(const RleString& rle, std::span<const Symbol> alphabet = {},
                 const BuildOptions& options = {});

/// Standalone D5 construction (left/right boundary passes over rle(T)).
D5Rep build_m5(const RleString& rle);

using MawSink = std::function<void(const MawHandle&)>;

void enum_m1(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops = nullptr);
void enum_m2(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops = nullptr);
void enum_m3(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops = nullptr);
void enum_m4(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops = nullptr);
void enum_m5(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops = nullptr);

inline constexpr std::uint32_t kAllTypes = 0b111110u;
constexpr std::uint32_t type_bit(int type_id) { return 1u << type_id; }

/// Types ascending, each enumerator's documented order within a type.
void enumerate_all(const ReprBundle& bundle, const MawSink& sink,
                   std::uint32_t type_mask = kAllTypes, OpCounter* ops = nullptr);

/// Raw Algorithm-1 walk over one graph: emits every (left, right) vertex pair
/// satisfying the three MAW conditions, sentinel-ended pairs included.
void d4_candidate_pairs(const D4Graph& graph,
                        const std::function<void(std::uint32_t, std::uint32_t)>& emit,
                        OpCounter* ops = nullptr);

/// Expanded records in enumeration order (convenience for tests and I/O).
std::vector<MawRecord> enumerate_records(const ReprBundle& bundle,
                                         std::uint32_t type_mask = kAllTypes);

/// Exact machine-word counts retained per structure.
SpaceReport space_words(const ReprBundle& bundle);

}  // namespace rlemaw
