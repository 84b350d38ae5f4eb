#pragma once

#include <string>
#include <string_view>

#include "rlemaw/rle.hpp"

namespace rlemaw {

// UTF-8 <-> symbol sequences. Decoding rejects malformed UTF-8.
std::vector<Symbol> utf8_to_symbols(std::string_view text);
std::string symbols_to_utf8(std::span<const Symbol> symbols);

// Byte mode: every byte is one symbol in 0..255.
std::vector<Symbol> bytes_to_symbols(std::string_view bytes);
std::string symbols_to_bytes(std::span<const Symbol> symbols);

// Token format for RLE files: whitespace-separated `<symbol>^<exponent>`
// tokens, e.g. `a^2 c^7 b^2 a^1 b^4`. The symbol is a single character,
// backslash-escaped when it is whitespace, '^' or a backslash.
std::string rle_to_tokens(const RleString& rle);
RleString tokens_to_rle(std::string_view tokens);

}  // namespace rlemaw
