#include "rlemaw/handle.hpp"

#include <charconv>

namespace rlemaw {

void expand_into(const MawHandle& h, const RleString& rle, std::vector<Run>& out) {
    out.clear();
    const std::uint64_t m = rle.run_count();
    auto window_check = [&] {
        if (h.run_span == 0 || h.run_index >= m || h.run_index + h.run_span > m) {
            throw InvalidHandle("handle window out of range of rle(T)");
        }
    };
    switch (h.type_id) {
        case 1:
            out.push_back({h.lead_symbol, h.lead_count});
            break;
        case 2:
            window_check();
            out.push_back({h.lead_symbol, 1});
            out.push_back({rle.run(h.run_index).symbol, 1});
            break;
        case 3:
            window_check();
            if (h.run_span != 2) throw InvalidHandle("type-3 window must span two runs");
            out.push_back({h.lead_symbol, 1});
            out.push_back({rle.run(h.run_index).symbol, h.lead_count});
            out.push_back({rle.run(h.run_index + 1).symbol, 1});
            break;
        case 4: {
            window_check();
            if (h.run_span < 2) throw InvalidHandle("type-4 window must span >= 2 runs");
            out.push_back({h.lead_symbol, 1});
            out.push_back({rle.run(h.run_index).symbol, h.lead_count});
            for (std::uint64_t i = h.run_index + 1; i + 1 < h.run_index + h.run_span; ++i) {
                out.push_back(rle.run(i));
            }
            out.push_back({rle.run(h.run_index + h.run_span - 1).symbol, 1});
            break;
        }
        case 5: {
            window_check();
            out.push_back({h.lead_symbol, h.lead_count});
            for (std::uint64_t i = h.run_index; i < h.run_index + h.run_span; ++i) {
                out.push_back(rle.run(i));
            }
            out.back().exponent = h.tail_exponent;
            break;
        }
        default:
            throw InvalidHandle("unknown handle type id");
    }
}

RleString expand(const MawHandle& h, const RleString& rle) {
    std::vector<Run> runs;
    expand_into(h, rle, runs);
    return RleString::from_runs(std::move(runs));
}

std::string to_fields(const MawHandle& h) {
    std::string out;
    out += std::to_string(h.type_id);
    out += ' ';
    out += std::to_string(h.lead_symbol);
    out += ' ';
    out += std::to_string(h.lead_count);
    out += ' ';
    out += std::to_string(h.run_index);
    out += ' ';
    out += std::to_string(h.run_span);
    out += ' ';
    out += std::to_string(h.tail_exponent);
    return out;
}

MawHandle from_fields(std::string_view fields) {
    std::array<std::uint64_t, 6> value{};
    const char* p = fields.data();
    const char* end = fields.data() + fields.size();
    for (std::size_t i = 0; i < 6; ++i) {
        while (p < end && *p == ' ') ++p;
        auto [next, ec] = std::from_chars(p, end, value[i]);
        if (ec != std::errc() || next == p) {
            throw InvalidHandle("expected six decimal handle fields");
        }
        p = next;
    }
    MawHandle h;
    h.type_id = static_cast<std::uint32_t>(value[0]);
    h.lead_symbol = static_cast<Symbol>(value[1]);
    h.lead_count = value[2];
    h.run_index = value[3];
    h.run_span = value[4];
    h.tail_exponent = value[5];
    return h;
}

}  // namespace rlemaw
