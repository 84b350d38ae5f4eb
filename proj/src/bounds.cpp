#include "rlemaw/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace rlemaw {

FamilyKind family_kind_from_name(std::string_view name) {
    if (name == "m2-perm") return FamilyKind::M2Perm;
    if (name == "m3-run") return FamilyKind::M3Run;
    if (name == "m4-grid") return FamilyKind::M4Grid;
    if (name == "m5-stairs") return FamilyKind::M5Stairs;
    throw InvalidInput("unknown family kind: " + std::string(name));
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::M2Perm: return "m2-perm";
        case FamilyKind::M3Run: return "m3-run";
        case FamilyKind::M4Grid: return "m4-grid";
        case FamilyKind::M5Stairs: return "m5-stairs";
    }
    return "?";
}

std::vector<Symbol> gen_family(const FamilySpec& spec) {
    std::vector<Symbol> text;
    switch (spec.kind) {
        case FamilyKind::M2Perm: {
            // sigma' mutually distinct symbols, each once.
            if (spec.size < 3 || spec.size > 26) {
                throw InvalidInput("m2-perm: size must be in 3..26");
            }
            for (std::uint64_t i = 0; i < spec.size; ++i) {
                text.push_back(static_cast<Symbol>('a' + i));
            }
            return text;
        }
        case FamilyKind::M3Run: {
            // a c^{n-2} b
            if (spec.size < 4) throw InvalidInput("m3-run: size (n) must be >= 4");
            text.push_back('a');
            text.insert(text.end(), static_cast<std::size_t>(spec.size - 2), 'c');
            text.push_back('b');
            return text;
        }
        case FamilyKind::M4Grid: {
            // abc^p . ab^2c^{p-1} ... ab^p c . a
            if (spec.size < 2) throw InvalidInput("m4-grid: size (p) must be >= 2");
            const std::uint64_t p = spec.size;
            for (std::uint64_t i = 1; i <= p; ++i) {
                text.push_back('a');
                text.insert(text.end(), static_cast<std::size_t>(i), 'b');
                text.insert(text.end(), static_cast<std::size_t>(p + 1 - i), 'c');
            }
            text.push_back('a');
            return text;
        }
        case FamilyKind::M5Stairs: {
            // abc . ab^2c^2 ... ab^p c^p . a
            if (spec.size < 2) throw InvalidInput("m5-stairs: size (p) must be >= 2");
            const std::uint64_t p = spec.size;
            for (std::uint64_t i = 1; i <= p; ++i) {
                text.push_back('a');
                text.insert(text.end(), static_cast<std::size_t>(i), 'b');
                text.insert(text.end(), static_cast<std::size_t>(i), 'c');
            }
            text.push_back('a');
            return text;
        }
    }
    throw InvalidInput("unknown family kind");
}

namespace {

void check(BoundReport& report, const std::string& name, std::uint64_t count,
           std::uint64_t bound, bool strict) {
    const bool ok = count <= bound;
    const double ratio =
        bound == 0 ? (count == 0 ? 0.0 : 1e9) : static_cast<double>(count) / bound;
    report.slacks.push_back({name, ratio, ok});
    if (!ok) {
        report.ok = false;
        if (strict) {
            throw BoundViolation(name, "count " + std::to_string(count) + " exceeds bound " +
                                           std::to_string(bound));
        }
    }
}

}  // namespace

BoundReport audit_bounds(const RleString& rle, std::span<const Symbol> alphabet,
                         bool cross_check_oracle, std::uint64_t oracle_limit, bool strict) {
    return audit_bundle(build(rle, alphabet), cross_check_oracle, oracle_limit, strict);
}

BoundReport audit_bundle(const ReprBundle& bundle, bool cross_check_oracle,
                         std::uint64_t oracle_limit, bool strict) {
    const RleString& rle = bundle.rle;
    BoundReport report;
    report.n = rle.length();
    report.m = rle.run_count();
    report.sigma_prime = bundle.sigma_prime.size();
    report.counts = bundle.counts;
    report.x_value = bundle.x_value;
    report.w_count = bundle.w_count;

    const std::uint64_t m = report.m;
    const std::uint64_t sp = report.sigma_prime;
    // |M1| = |Sigma| is an equality, reported with the same slack convention.
    if (bundle.counts[1] != bundle.alphabet.size()) {
        report.ok = false;
        report.slacks.push_back({"m1_eq_sigma", 1e9, false});
        if (strict) throw BoundViolation("m1_eq_sigma", "|M1| != |alphabet|");
    } else {
        report.slacks.push_back({"m1_eq_sigma", 1.0, true});
    }
    check(report, "m2_le_sigma'(sigma'-1)", bundle.counts[2], sp * (sp ? sp - 1 : 0), strict);
    check(report, "m5_le_2(m+1)", bundle.counts[5], 2 * (m + 1), strict);
    check(report, "x_le_2(2m+1)", bundle.x_value, 2 * (2 * m + 1), strict);
    check(report, "m4_le_x^2", bundle.counts[4], bundle.x_value * bundle.x_value, strict);

    if (cross_check_oracle && report.n <= oracle_limit) {
        report.oracle_checked = true;
        const std::vector<Symbol> text = rle.decode();
        const auto oracle_counts = count_by_type(text, bundle.alphabet);
        if (oracle_counts != bundle.counts) {
            report.ok = false;
            report.slacks.push_back({"oracle_equivalence", 1e9, false});
            if (strict) throw BoundViolation("oracle_equivalence", "per-type counts differ");
        }
    }
    return report;
}

std::vector<ScaleRow> scaling_probe(std::span<const FamilySpec> specs, Measure measure) {
    std::vector<ScaleRow> rows;
    for (const FamilySpec& spec : specs) {
        const std::vector<Symbol> text = gen_family(spec);
        const RleString rle = RleString::encode(text);
        const ReprBundle bundle = build(rle);

        ScaleRow row;
        row.param = family_name(spec.kind) + ":" + std::to_string(spec.size);
        row.n = rle.length();
        row.m = rle.run_count();
        row.sigma_prime = bundle.sigma_prime.size();
        row.counts = bundle.counts;
        row.x_value = bundle.x_value;
        row.space_words = space_words(bundle).total();
        if (measure == Measure::Time) {
            std::uint64_t sum = 0;
            const auto start = std::chrono::steady_clock::now();
            enumerate_all(bundle, [&](const MawHandle& h) { sum += h.lead_count; });
            const auto stop = std::chrono::steady_clock::now();
            row.time_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            if (sum == 0xdeadbeef) row.time_ns += 1;  // keep the sink alive
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_csv(std::span<const ScaleRow> rows) {
    std::ostringstream out;
    out << "param,n,m,sigma_prime,count_m1,count_m2,count_m3,count_m4,count_m5,X,"
           "space_words,time_ns\n";
    for (const ScaleRow& r : rows) {
        out << r.param << ',' << r.n << ',' << r.m << ',' << r.sigma_prime;
        for (int t = 1; t <= 5; ++t) out << ',' << r.counts[static_cast<std::size_t>(t)];
        out << ',' << r.x_value << ',' << r.space_words << ',' << r.time_ns << '\n';
    }
    return out.str();
}

std::vector<Symbol> random_string(std::mt19937_64& rng, const RandomStringOptions& options) {
    std::uniform_int_distribution<std::uint64_t> sigma_dist(2, 6);
    std::uniform_int_distribution<std::uint64_t> len_dist(4, options.max_length);
    std::geometric_distribution<std::uint64_t> exp_dist(1.0 / 3.0);  // mean 3 with the +1

    const std::uint64_t sigma = sigma_dist(rng);
    const std::uint64_t cap = len_dist(rng);
    std::uniform_int_distribution<Symbol> sym_dist('a', static_cast<Symbol>('a' + sigma - 1));

    std::vector<Symbol> text;
    Symbol prev = kSentinel;
    while (text.size() < cap) {
        Symbol s = sym_dist(rng);
        while (s == prev) s = sym_dist(rng);
        const std::uint64_t exponent =
            std::min<std::uint64_t>(exp_dist(rng) + 1, cap - text.size());
        text.insert(text.end(), static_cast<std::size_t>(exponent), s);
        prev = s;
    }
    return text;
}

}  // namespace rlemaw
