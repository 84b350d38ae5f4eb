#pragma once

#include <cstdint>
#include <string>

#include "rlemaw/rle.hpp"

namespace rlemaw {

/// Constant-size reference to one MAW, expandable against rle(T) in O(R(w))
/// time. Six fields, at most six machine words.
///
/// Field use by type (run indices address rle(T) without sentinels):
///   1  a^k              lead=(a,k); window unused, tail_exponent=k.
///   2  a·b              lead=(a,1); window = one run carrying symbol b.
///   3  a·c^k·b          lead=(a,1); lead_count=k (exponent of the middle
///                       run; the MAW's own first run has exponent 1 by
///                       definition of the type); window = [c-run, b-run],
///                       adjacent in rle(T), read for the symbols only.
///   4  a·α^i·u·β^j·b    lead=(a,1); lead_count=i; window spans the α-run
///                       through the b-run of a witness occurrence, copied
///                       verbatim except the first exponent (-> i) and the
///                       last (-> 1).
///   5  a^k·v·b'         lead=(a,k); window = v's runs plus, when the MAW
///                       does not end inside v's last run, the run carrying
///                       the final symbol; copied verbatim except the last
///                       exponent (-> tail_exponent).
///
/// tail_exponent always equals the exponent of the MAW's last run.
struct MawHandle {
    std::uint32_t type_id = 0;
    Symbol lead_symbol = 0;
    std::uint64_t lead_count = 0;
    std::uint64_t run_index = 0;
    std::uint64_t run_span = 0;
    std::uint64_t tail_exponent = 0;

    friend bool operator==(const MawHandle&, const MawHandle&) = default;
};

static_assert(sizeof(MawHandle) <= 6 * sizeof(std::uint64_t));

/// Rebuilds the MAW's RLE form from a handle produced against this rle(T).
/// Throws InvalidHandle on an out-of-range window or type id.
RleString expand(const MawHandle& handle, const RleString& rle);

/// Same, reusing `out`'s capacity across calls.
void expand_into(const MawHandle& handle, const RleString& rle, std::vector<Run>& out);

/// Six space-separated decimal fields:
/// type lead_symbol lead_count run_index run_span tail_exponent.
std::string to_fields(const MawHandle& handle);
MawHandle from_fields(std::string_view fields);

}  // namespace rlemaw
