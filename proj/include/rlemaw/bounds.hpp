#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rlemaw/repr.hpp"

namespace rlemaw {

enum class FamilyKind { M2Perm, M3Run, M4Grid, M5Stairs };

/// Lower-bound family generators. Sizes: m2-perm takes sigma' >= 3 (distinct
/// letters, at most 26), m3-run takes n >= 4, m4-grid and m5-stairs take
/// p >= 2.
struct FamilySpec {
    FamilyKind kind;
    std::uint64_t size;
};

FamilyKind family_kind_from_name(std::string_view name);  // "m2-perm" etc.
std::string family_name(FamilyKind kind);
std::vector<Symbol> gen_family(const FamilySpec& spec);

struct BoundSlack {
    std::string check;
    double ratio;  // count / bound; <= 1 when the bound holds
    bool ok;
};

struct BoundReport {
    std::uint64_t n = 0, m = 0, sigma_prime = 0;
    std::array<std::uint64_t, 6> counts{};
    std::uint64_t x_value = 0, w_count = 0;
    std::vector<BoundSlack> slacks;
    bool ok = true;
    bool oracle_checked = false;
};

/// Builds the bundle, checks every counting bound, optionally cross-checks
/// the enumeration against the brute-force oracle (for n <= oracle_limit).
/// Throws BoundViolation when a bound fails (and `strict`).
BoundReport audit_bounds(const RleString& rle, std::span<const Symbol> alphabet = {},
                         bool cross_check_oracle = false, std::uint64_t oracle_limit = 4096,
                         bool strict = true);

/// Same checks over an already-built bundle.
BoundReport audit_bundle(const ReprBundle& bundle, bool cross_check_oracle = false,
                         std::uint64_t oracle_limit = 4096, bool strict = true);

struct ScaleRow {
    std::string param;
    std::uint64_t n = 0, m = 0, sigma_prime = 0;
    std::array<std::uint64_t, 6> counts{};
    std::uint64_t x_value = 0;
    std::uint64_t space_words = 0;
    std::uint64_t time_ns = 0;
};

enum class Measure { Space, Time };

std::vector<ScaleRow> scaling_probe(std::span<const FamilySpec> specs, Measure measure);

/// CSV with the fixed header
/// param,n,m,sigma_prime,count_m1,count_m2,count_m3,count_m4,count_m5,X,space_words,time_ns
std::string to_csv(std::span<const ScaleRow> rows);

/// Random-corpus distribution used by the audits: alphabet size uniform in
/// [2,6] over 'a'.., run exponents geometric with mean 3, run symbols uniform
/// and distinct from their predecessor, decoded length capped by a draw from
/// [4, max_length].
struct RandomStringOptions {
    std::uint64_t max_length = 64;
};

std::vector<Symbol> random_string(std::mt19937_64& rng, const RandomStringOptions& options = {});

}  // namespace rlemaw
