#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlemaw/rle.hpp"
#include "rlemaw/text.hpp"

namespace rlemaw::testing {

// ASCII text -> symbols; '$' maps to the internal sentinel so paper-style
// strings like "$ab$" can be written directly in tests.
inline std::vector<Symbol> sym(std::string_view text) {
    std::vector<Symbol> out;
    for (char c : text) {
        out.push_back(c == '$' ? kSentinel : static_cast<Symbol>(static_cast<unsigned char>(c)));
    }
    return out;
}

inline RleString rle_of(std::string_view text) {
    RleString out;
    for (Symbol s : sym(text)) out.append(s, 1);
    return out;
}

inline std::string str(std::span<const Symbol> symbols) {
    std::string out;
    for (Symbol s : symbols) out.push_back(s == kSentinel ? '$' : static_cast<char>(s));
    return out;
}

inline std::string str(const RleString& rle) {
    const auto symbols = rle.decode();
    return str(symbols);
}

// Every string of the given length over the first `sigma` letters, invoking
// fn(text) for each.
template <typename Fn>
void for_each_string(std::size_t length, std::size_t sigma, Fn&& fn) {
    std::vector<Symbol> text(length, 'a');
    while (true) {
        fn(const_cast<const std::vector<Symbol>&>(text));
        std::size_t i = 0;
        for (; i < length; ++i) {
            if (text[i] != 'a' + sigma - 1) {
                ++text[i];
                std::fill(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(i), 'a');
                break;
            }
        }
        if (i == length) break;
    }
}

}  // namespace rlemaw::testing
