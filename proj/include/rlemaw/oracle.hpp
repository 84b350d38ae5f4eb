#pragma once

#include <array>
#include <cstdint>

#include "rlemaw/rle.hpp"

namespace rlemaw {

/// Fully expanded MAW with its type id; the exchange currency between the
/// brute-force reference and the compressed enumerators.
struct MawRecord {
    std::vector<Symbol> word;
    int type_id = 0;
    RleString rle_form;

    friend bool operator==(const MawRecord&, const MawRecord&) = default;
    friend auto operator<=>(const MawRecord&, const MawRecord&) = default;
};

/// Number of occurrences of `w` in `text`; the empty word occurs |text|+1
/// times by convention (it is a substring of every string).
std::uint64_t occurs(std::span<const Symbol> w, std::span<const Symbol> text);

/// Type id 1..5 of a MAW by the RLE shape of a·u·b (not checked to be a MAW).
int classify(std::span<const Symbol> maw);

/// Distinct symbols of `text` in increasing code order.
std::vector<Symbol> occurring_symbols(std::span<const Symbol> text);

/// Reference enumeration of MAW(text) over the given ordered alphabet, which
/// must cover every symbol of the text (empty means: the occurring symbols).
/// Length-1 MAWs are the alphabet symbols absent from the text. Output is
/// sorted by (word length, word).
///
/// Quadratic-ish and intended for desk-scale inputs; this is the correctness
/// anchor for everything else, not a competitor.
std::vector<MawRecord> maws_bruteforce(std::span<const Symbol> text,
                                       std::span<const Symbol> alphabet = {});

/// Sizes |M1|..|M5| of the oracle set, indexed by type id (slot 0 unused).
std::array<std::uint64_t, 6> count_by_type(std::span<const Symbol> text,
                                           std::span<const Symbol> alphabet = {});

}  // namespace rlemaw
