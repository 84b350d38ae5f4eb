#include "rlemaw/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rlemaw {

namespace {

// Sorted start positions of all suffixes; plain comparison sort, fine at
// oracle scale.
std::vector<std::uint32_t> suffix_order(std::span<const Symbol> text) {
    std::vector<std::uint32_t> sa(text.size());
    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(text.begin() + a, text.end(),
                                            text.begin() + b, text.end());
    });
    return sa;
}

std::uint64_t common_prefix(std::span<const Symbol> text, std::size_t i, std::size_t j) {
    std::uint64_t k = 0;
    while (i + k < text.size() && j + k < text.size() && text[i + k] == text[j + k]) ++k;
    return k;
}

class SubstringIndex {
public:
    explicit SubstringIndex(std::span<const Symbol> text)
        : text_(text), sa_(suffix_order(text)) {}

    bool present(std::span<const Symbol> w) const {
        if (w.empty()) return true;
        auto it = std::lower_bound(sa_.begin(), sa_.end(), w,
                                   [&](std::uint32_t pos, std::span<const Symbol> key) {
                                       return std::lexicographical_compare(
                                           text_.begin() + pos, text_.end(), key.begin(),
                                           key.end());
                                   });
        if (it == sa_.end()) return false;
        const std::size_t pos = *it;
        if (text_.size() - pos < w.size()) return false;
        return std::equal(w.begin(), w.end(), text_.begin() + pos);
    }

    // Invokes fn(pos, len) once per distinct substring occurring at least
    // twice; (pos, len) is the leftmost-in-suffix-order witness.
    template <typename Fn>
    void for_each_repeated_substring(Fn&& fn) const {
        std::uint64_t prev_lcp = 0;
        for (std::size_t r = 0; r < sa_.size(); ++r) {
            const std::uint64_t next_lcp =
                r + 1 < sa_.size() ? common_prefix(text_, sa_[r], sa_[r + 1]) : 0;
            for (std::uint64_t len = prev_lcp + 1; len <= next_lcp; ++len) {
                fn(sa_[r], len);
            }
            prev_lcp = next_lcp;
        }
    }

private:
    std::span<const Symbol> text_;
    std::vector<std::uint32_t> sa_;
};

}  // namespace

std::uint64_t occurs(std::span<const Symbol> w, std::span<const Symbol> text) {
    if (w.empty()) return text.size() + 1;
    if (w.size() > text.size()) return 0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + w.size() <= text.size(); ++i) {
        if (std::equal(w.begin(), w.end(), text.begin() + i)) ++count;
    }
    return count;
}

int classify(std::span<const Symbol> maw) {
    const RleString rle = RleString::encode(maw);
    const std::size_t r = rle.run_count();
    if (r <= 1) return 1;
    if (r == 2 && maw.size() == 2) return 2;
    // a = maw.front(), b = maw.back(), u = maw[1..size-2].
    const bool left_clean = maw.front() != maw[1];
    const bool right_clean = maw.back() != maw[maw.size() - 2];
    if (left_clean && right_clean) return r == 3 ? 3 : 4;
    return 5;
}

std::vector<Symbol> occurring_symbols(std::span<const Symbol> text) {
    std::set<Symbol> set(text.begin(), text.end());
    return {set.begin(), set.end()};
}

std::vector<MawRecord> maws_bruteforce(std::span<const Symbol> text,
                                       std::span<const Symbol> alphabet) {
    std::vector<Symbol> defaulted;
    if (alphabet.empty()) {
        defaulted = occurring_symbols(text);
        alphabet = defaulted;
    }
    const std::set<Symbol> sigma(alphabet.begin(), alphabet.end());
    for (Symbol s : text) {
        if (!sigma.count(s)) {
            throw InvalidInput("maws_bruteforce: alphabet is missing a text symbol");
        }
    }
    if (sigma.count(kSentinel)) {
        throw InvalidInput("maws_bruteforce: alphabet contains the sentinel");
    }

    const std::set<Symbol> occurring(text.begin(), text.end());
    const SubstringIndex index(text);

    std::vector<MawRecord> out;
    auto record = [&](std::vector<Symbol> word) {
        MawRecord rec;
        rec.type_id = classify(word);
        rec.rle_form = RleString::encode(word);
        rec.word = std::move(word);
        out.push_back(std::move(rec));
    };

    // Length 1: alphabet symbols that never occur.
    for (Symbol s : alphabet) {
        if (!occurring.count(s)) record({s});
    }

    // Length 2: a·b with both symbols present and the bigram absent.
    for (Symbol a : occurring) {
        for (Symbol b : occurring) {
            const std::array<Symbol, 2> w{a, b};
            if (!index.present(w)) record({a, b});
        }
    }

    // Length >= 3: a·u·b needs two distinct occurrences of u, so u ranges
    // over the repeated substrings only.
    std::vector<Symbol> probe;
    index.for_each_repeated_substring([&](std::uint32_t pos, std::uint64_t len) {
        probe.assign(len + 2, 0);
        std::copy(text.begin() + pos, text.begin() + pos + len, probe.begin() + 1);
        const std::span<const Symbol> all(probe);
        for (Symbol a : occurring) {
            probe.front() = a;
            if (!index.present(all.subspan(0, len + 1))) continue;  // a·u absent
            for (Symbol b : occurring) {
                probe.back() = b;
                if (!index.present(all.subspan(1))) continue;  // u·b absent
                if (index.present(all)) continue;              // a·u·b occurs
                record({probe.begin(), probe.end()});
            }
        }
    });

    std::sort(out.begin(), out.end(), [](const MawRecord& x, const MawRecord& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return out;
}

std::array<std::uint64_t, 6> count_by_type(std::span<const Symbol> text,
                                           std::span<const Symbol> alphabet) {
    std::array<std::uint64_t, 6> counts{};
    for (const MawRecord& rec : maws_bruteforce(text, alphabet)) {
        counts[static_cast<std::size_t>(rec.type_id)] += 1;
    }
    return counts;
}

}  // namespace rlemaw
