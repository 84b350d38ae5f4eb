#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rlemaw/errors.hpp"

namespace rlemaw {

// A symbol is a unicode scalar value. One value outside the unicode range is
// reserved as the internal boundary sentinel; it never appears in user input
// or in any emitted MAW, but it participates internally as an occurrence
// witness at both ends of the text.
using Symbol = std::uint32_t;

inline constexpr Symbol kSentinel = 0xFFFFFFFFu;
inline constexpr Symbol kMaxScalar = 0x10FFFFu;

struct Run {
    Symbol symbol = 0;
    std::uint64_t exponent = 0;

    friend auto operator<=>(const Run&, const Run&) = default;
};

/// Run-length encoded string in canonical form: adjacent runs carry distinct
/// symbols and every exponent is >= 1. Sentinel runs are representable (the
/// bridge machinery builds such strings internally) but encode() rejects
/// sentinel symbols in user text.
class RleString {
public:
    RleString() = default;

    static RleString encode(std::span<const Symbol> text);

    // Validates canonical form.
    static RleString from_runs(std::vector<Run> runs);

    std::vector<Symbol> decode() const;

    // Canonicalizing append: merges with the last run when symbols match.
    void append(Symbol symbol, std::uint64_t exponent);

    std::size_t run_count() const { return runs_.size(); }
    bool empty() const { return runs_.empty(); }
    std::uint64_t length() const;

    const Run& run(std::size_t i) const { return runs_[i]; }
    const std::vector<Run>& runs() const { return runs_; }

    bool contains_sentinel() const;

    friend bool operator==(const RleString&, const RleString&) = default;
    friend auto operator<=>(const RleString&, const RleString&) = default;

private:
    std::vector<Run> runs_;
};

/// One-step interior operator: drops the first and last runs and truncates
/// the new end runs to exponent 1. Returns the empty string when the input
/// has at most two runs.
RleString interior(const RleString& w);

/// t-fold application of interior().
RleString interior_power(RleString w, std::uint32_t t);

// Sentinel-extended run access: index -1 and run_count() address the virtual
// '$' runs flanking the text. Valid range is [-1, run_count()].
Run ext_run(const RleString& rle, std::int64_t index);

/// A window of `ell` consecutive runs of the sentinel-extended text, with the
/// two boundary runs truncated to exponent 1. `run_index` is the index of the
/// window's first run in sentinel-extended coordinates (-1 = left sentinel).
struct BridgeOccurrence {
    RleString bridge;
    std::int64_t run_index = 0;
    std::uint64_t count = 1;
};

/// All bridge substrings with exactly `ell` runs, as windows over the
/// sentinel-extended text. With `aggregate`, equal bridges are merged, counts
/// summed, and the first window kept as witness; order follows the leftmost
/// occurrence either way.
std::vector<BridgeOccurrence> bridge_windows(const RleString& rle, std::size_t ell,
                                             bool aggregate = false);

}  // namespace rlemaw
