#include "rlemaw/text.hpp"

#include <charconv>

namespace rlemaw {

namespace {

void append_utf8(std::string& out, Symbol s) {
    if (s <= 0x7F) {
        out.push_back(static_cast<char>(s));
    } else if (s <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (s >> 6)));
        out.push_back(static_cast<char>(0x80 | (s & 0x3F)));
    } else if (s <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (s >> 12)));
        out.push_back(static_cast<char>(0x80 | ((s >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (s & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (s >> 18)));
        out.push_back(static_cast<char>(0x80 | ((s >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((s >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (s & 0x3F)));
    }
}

// Decodes one scalar starting at `pos`; advances `pos`.
Symbol next_scalar(std::string_view text, std::size_t& pos) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t extra;
    Symbol value;
    if (lead < 0x80) {
        extra = 0;
        value = lead;
    } else if ((lead >> 5) == 0x6) {
        extra = 1;
        value = lead & 0x1F;
    } else if ((lead >> 4) == 0xE) {
        extra = 2;
        value = lead & 0x0F;
    } else if ((lead >> 3) == 0x1E) {
        extra = 3;
        value = lead & 0x07;
    } else {
        throw InvalidInput("malformed UTF-8 (bad lead byte)");
    }
    if (pos + extra >= text.size()) {
        throw InvalidInput("malformed UTF-8 (truncated sequence)");
    }
    for (std::size_t i = 1; i <= extra; ++i) {
        const auto cont = static_cast<unsigned char>(text[pos + i]);
        if ((cont >> 6) != 0x2) {
            throw InvalidInput("malformed UTF-8 (bad continuation byte)");
        }
        value = (value << 6) | (cont & 0x3F);
    }
    pos += extra + 1;
    static constexpr Symbol kMinForLength[4] = {0, 0x80, 0x800, 0x10000};
    if (value < kMinForLength[extra]) {
        throw InvalidInput("malformed UTF-8 (overlong encoding)");
    }
    if (value > kMaxScalar || (value >= 0xD800 && value <= 0xDFFF)) {
        throw InvalidInput("malformed UTF-8 (invalid scalar value)");
    }
    return value;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::vector<Symbol> utf8_to_symbols(std::string_view text) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        out.push_back(next_scalar(text, pos));
    }
    return out;
}

std::string symbols_to_utf8(std::span<const Symbol> symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) {
        if (s > kMaxScalar) throw InvalidInput("symbol outside the unicode range");
        append_utf8(out, s);
    }
    return out;
}

std::vector<Symbol> bytes_to_symbols(std::string_view bytes) {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (char c : bytes) out.push_back(static_cast<unsigned char>(c));
    return out;
}

std::string symbols_to_bytes(std::span<const Symbol> symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) {
        if (s > 0xFF) throw InvalidInput("symbol does not fit in a byte");
        out.push_back(static_cast<char>(s));
    }
    return out;
}

std::string rle_to_tokens(const RleString& rle) {
    std::string out;
    for (std::size_t i = 0; i < rle.run_count(); ++i) {
        if (i > 0) out.push_back(' ');
        const Run& r = rle.run(i);
        const bool escape = r.symbol == '^' || r.symbol == '\\' ||
                            (r.symbol < 0x80 && is_space(static_cast<char>(r.symbol)));
        if (escape) out.push_back('\\');
        append_utf8(out, r.symbol);
        out.push_back('^');
        out += std::to_string(r.exponent);
    }
    return out;
}

RleString tokens_to_rle(std::string_view tokens) {
    std::vector<Run> runs;
    std::size_t pos = 0;
    while (true) {
        while (pos < tokens.size() && is_space(tokens[pos])) ++pos;
        if (pos >= tokens.size()) break;

        bool escaped = false;
        if (tokens[pos] == '\\') {
            escaped = true;
            ++pos;
            if (pos >= tokens.size()) throw InvalidInput("rle tokens: dangling backslash");
        }
        const Symbol symbol = next_scalar(tokens, pos);
        if (!escaped && (symbol == '^')) {
            throw InvalidInput("rle tokens: missing symbol before '^'");
        }
        if (pos >= tokens.size() || tokens[pos] != '^') {
            throw InvalidInput("rle tokens: expected '^' after symbol");
        }
        ++pos;
        std::uint64_t exponent = 0;
        const char* begin = tokens.data() + pos;
        const char* end = tokens.data() + tokens.size();
        auto [next, ec] = std::from_chars(begin, end, exponent);
        if (ec != std::errc() || next == begin) {
            throw InvalidInput("rle tokens: expected a decimal exponent");
        }
        if (exponent == 0) throw InvalidInput("rle tokens: exponent must be >= 1");
        pos += static_cast<std::size_t>(next - begin);
        if (pos < tokens.size() && !is_space(tokens[pos])) {
            throw InvalidInput("rle tokens: trailing garbage in token");
        }
        if (!runs.empty() && runs.back().symbol == symbol) {
            throw InvalidInput("rle tokens: adjacent runs share a symbol");
        }
        runs.push_back({symbol, exponent});
    }
    return RleString::from_runs(std::move(runs));
}

}  // namespace rlemaw
