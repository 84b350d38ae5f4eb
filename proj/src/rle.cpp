#include "rlemaw/rle.hpp"

#include <algorithm>
#include <map>

namespace rlemaw {

RleString RleString::encode(std::span<const Symbol> text) {
    RleString out;
    for (Symbol s : text) {
        if (s == kSentinel) {
            throw InvalidInput("encode: input contains the reserved sentinel symbol");
        }
        out.append(s, 1);
    }
    return out;
}

RleString RleString::from_runs(std::vector<Run> runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].exponent == 0) {
            throw InvalidInput("from_runs: zero exponent");
        }
        if (i > 0 && runs[i].symbol == runs[i - 1].symbol) {
            throw InvalidInput("from_runs: adjacent runs share a symbol");
        }
    }
    RleString out;
    out.runs_ = std::move(runs);
    return out;
}

std::vector<Symbol> RleString::decode() const {
    std::vector<Symbol> text;
    text.reserve(static_cast<std::size_t>(length()));
    for (const Run& r : runs_) {
        text.insert(text.end(), static_cast<std::size_t>(r.exponent), r.symbol);
    }
    return text;
}

void RleString::append(Symbol symbol, std::uint64_t exponent) {
    if (exponent == 0) return;
    if (!runs_.empty() && runs_.back().symbol == symbol) {
        runs_.back().exponent += exponent;
    } else {
        runs_.push_back({symbol, exponent});
    }
}

std::uint64_t RleString::length() const {
    std::uint64_t n = 0;
    for (const Run& r : runs_) n += r.exponent;
    return n;
}

bool RleString::contains_sentinel() const {
    return std::any_of(runs_.begin(), runs_.end(),
                       [](const Run& r) { return r.symbol == kSentinel; });
}

RleString interior(const RleString& w) {
    if (w.run_count() <= 2) return {};
    std::vector<Run> runs(w.runs().begin() + 1, w.runs().end() - 1);
    runs.front().exponent = 1;
    runs.back().exponent = 1;
    return RleString::from_runs(std::move(runs));
}

RleString interior_power(RleString w, std::uint32_t t) {
    for (std::uint32_t i = 0; i < t && !w.empty(); ++i) {
        w = interior(w);
    }
    return w;
}

Run ext_run(const RleString& rle, std::int64_t index) {
    const auto m = static_cast<std::int64_t>(rle.run_count());
    if (index == -1 || index == m) return {kSentinel, 1};
    return rle.run(static_cast<std::size_t>(index));
}

std::vector<BridgeOccurrence> bridge_windows(const RleString& rle, std::size_t ell,
                                             bool aggregate) {
    if (ell < 2) {
        throw InvalidInput("bridge_windows: a bridge has at least 2 runs");
    }
    if (rle.empty()) return {};  // the two sentinels coalesce; no bridges
    const auto m = static_cast<std::int64_t>(rle.run_count());
    const auto span = static_cast<std::int64_t>(ell);

    std::vector<BridgeOccurrence> out;
    std::map<std::vector<Run>, std::size_t> seen;  // bridge runs -> index in `out`
    for (std::int64_t s = -1; s + span - 1 <= m; ++s) {
        std::vector<Run> runs;
        runs.reserve(ell);
        for (std::int64_t i = s; i < s + span; ++i) {
            runs.push_back(ext_run(rle, i));
        }
        runs.front().exponent = 1;
        runs.back().exponent = 1;
        if (aggregate) {
            auto [it, inserted] = seen.try_emplace(runs, out.size());
            if (!inserted) {
                out[it->second].count += 1;
                continue;
            }
        }
        out.push_back({RleString::from_runs(std::move(runs)), s, 1});
    }
    return out;
}

}  // namespace rlemaw
