#include "rlemaw/repr.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rlemaw {

namespace {

void tick(OpCounter* ops, std::uint64_t n = 1) {
    if (ops) ops->ops += n;
}

MawHandle m3_handle(Symbol a, std::uint64_t k, std::uint64_t c_run) {
    return {3, a, k, c_run, 2, 1};
}

// The two-stage walk over the per-middle-symbol bridge lists. Stage 1 scans
// the bridge substrings in increasing exponent order and reports the gaps;
// stage 2 combines the per-symbol left/right maxima. Entries with a sentinel
// endpoint update the table and the maxima but never emit.
void run_m3(const D3Rep& d3, const MawSink& sink, OpCounter* ops) {
    for (const D3Group& g : d3.groups) {
        std::map<std::pair<Symbol, Symbol>, std::uint64_t> table;
        for (const D3Entry& e : g.entries) {
            tick(ops);
            auto [it, inserted] = table.try_emplace({e.left, e.right}, e.exponent);
            std::uint64_t from = 1;
            if (!inserted) {
                from = it->second + 1;
                it->second = e.exponent;
            }
            if (e.left == kSentinel || e.right == kSentinel) continue;
            for (std::uint64_t k = from; k < e.exponent; ++k) {
                tick(ops);
                sink(m3_handle(e.left, k, e.c_run));
            }
        }
        for (const auto& [a, a_max] : g.left_max) {
            if (a == kSentinel) continue;
            for (const auto& [b, b_max, b_witness] : g.right_max) {
                if (b == kSentinel) continue;
                tick(ops);
                const std::uint64_t bound = std::min(a_max, b_max);
                std::uint64_t from = 1;
                if (auto it = table.find({a, b}); it != table.end()) {
                    if (it->second >= bound) continue;
                    from = it->second + 1;
                }
                for (std::uint64_t k = from; k <= bound; ++k) {
                    tick(ops);
                    sink(m3_handle(a, k, b_witness));
                }
            }
        }
    }
}

std::uint64_t m3_count(const D3Rep& d3) {
    std::uint64_t total = 0;
    for (const D3Group& g : d3.groups) {
        std::map<std::pair<Symbol, Symbol>, std::uint64_t> entry_count;
        for (const D3Entry& e : g.entries) ++entry_count[{e.left, e.right}];
        for (const auto& [a, a_max] : g.left_max) {
            if (a == kSentinel) continue;
            for (const auto& [b, b_max, b_witness] : g.right_max) {
                if (b == kSentinel) continue;
                const std::uint64_t bound = std::min(a_max, b_max);
                const auto it = entry_count.find({a, b});
                // every bridge substring a·c^l·b has l <= bound
                total += bound - (it == entry_count.end() ? 0 : it->second);
            }
        }
    }
    return total;
}

void run_m2(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    const auto& sp = bundle.sigma_prime;
    const auto& pairs = bundle.d2.adjacent_pairs;
    std::size_t pi = 0;
    for (std::size_t ai = 0; ai < sp.size(); ++ai) {
        for (std::size_t bi = 0; bi < sp.size(); ++bi) {
            tick(ops);
            const std::pair<Symbol, Symbol> key{sp[ai], sp[bi]};
            while (pi < pairs.size() && pairs[pi] < key) {
                ++pi;
                tick(ops);
            }
            if (ai == bi) continue;
            if (pi < pairs.size() && pairs[pi] == key) continue;
            // run_of_symbol is sorted over exactly the occurring symbols
            sink({2, sp[ai], 1, bundle.d2.run_of_symbol[bi].second, 1, 1});
        }
    }
}

void run_m4(const D4Rep& d4, const MawSink& sink, OpCounter* ops) {
    for (const D4Graph& g : d4.graphs) {
        d4_candidate_pairs(
            g,
            [&](std::uint32_t l, std::uint32_t r) {
                if (g.left[l].symbol == kSentinel || g.right[r].symbol == kSentinel) return;
                sink({4, g.left[l].symbol, g.left[l].exponent, g.right_witness[r],
                      g.window_span, 1});
            },
            ops);
    }
}

std::vector<Symbol> validated_alphabet(std::span<const Symbol> alphabet,
                                       const std::vector<Symbol>& sigma_prime) {
    if (alphabet.empty()) return sigma_prime;
    std::set<Symbol> seen;
    for (Symbol s : alphabet) {
        if (s == kSentinel) throw InvalidInput("alphabet contains the sentinel");
        if (!seen.insert(s).second) throw InvalidInput("alphabet has a repeated symbol");
    }
    for (Symbol s : sigma_prime) {
        if (!seen.count(s)) throw InvalidInput("alphabet is missing a text symbol");
    }
    return {alphabet.begin(), alphabet.end()};
}

}  // namespace

void d4_candidate_pairs(const D4Graph& g,
                        const std::function<void(std::uint32_t, std::uint32_t)>& emit,
                        OpCounter* ops) {
    const auto nl = static_cast<std::uint32_t>(g.left.size());
    const auto nr = static_cast<std::uint32_t>(g.right.size());

    // Candidate right vertices as a linked list in exponent order; vertices
    // failing the suffix condition drop out for good (left exponents are
    // scanned in non-decreasing order).
    std::vector<std::uint32_t> next(nr + 1), prev(nr + 1);
    for (std::uint32_t i = 0; i <= nr; ++i) {
        next[i] = i + 1 > nr ? 0 : i + 1;
        prev[i] = i == 0 ? nr : i - 1;
    }
    next[nr] = 0;  // head sentinel -> first vertex

    // CSR adjacency over edges sorted by (left, right).
    std::vector<std::uint32_t> adj_begin(nl + 1, 0);
    for (const auto& e : g.edges) ++adj_begin[e.first + 1];
    for (std::uint32_t i = 1; i <= nl; ++i) adj_begin[i] += adj_begin[i - 1];

    for (std::uint32_t k = 0; k < nl; ++k) {
        tick(ops);
        const std::uint64_t limit = g.left_max_rexp[k];
        std::uint32_t ai = adj_begin[k];
        const std::uint32_t ae = adj_begin[k + 1];
        std::uint32_t it = next[nr];
        while (it != nr && g.right[it].exponent <= limit) {
            tick(ops);
            const std::uint32_t after = next[it];
            while (ai < ae && g.edges[ai].second < it) {
                ++ai;
                tick(ops);
            }
            if (ai < ae && g.edges[ai].second == it) {
                it = after;
                continue;
            }
            if (g.right_max_lexp[it] >= g.left[k].exponent) {
                emit(k, it);
            } else {
                next[prev[it]] = next[it];
                prev[next[it]] = prev[it];
            }
            it = after;
        }
    }
}

ReprBundle build(const RleString& rle, std::span<const Symbol> alphabet,
                 const BuildOptions& options) {
    if (rle.contains_sentinel()) {
        throw InvalidInput("build: text contains the reserved sentinel symbol");
    }
    ReprBundle b;
    b.rle = rle;
    const std::uint64_t m = rle.run_count();

    {
        std::set<Symbol> occ;
        for (const Run& r : rle.runs()) occ.insert(r.symbol);
        b.sigma_prime.assign(occ.begin(), occ.end());
    }
    b.alphabet = validated_alphabet(alphabet, b.sigma_prime);
    const auto threshold =
        static_cast<std::uint64_t>(options.explicit_factor * static_cast<double>(m));

    // D1: longest maximal run per occurring symbol.
    {
        std::map<Symbol, std::uint64_t> longest;
        for (const Run& r : rle.runs()) {
            auto [it, inserted] = longest.try_emplace(r.symbol, r.exponent);
            if (!inserted) it->second = std::max(it->second, r.exponent);
        }
        b.d1.longest_runs.assign(longest.begin(), longest.end());
    }

    // D2: adjacent distinct pairs plus one witness run per symbol.
    {
        std::set<std::pair<Symbol, Symbol>> pairs;
        std::map<Symbol, std::uint64_t> run_of;
        for (std::size_t i = 0; i < rle.run_count(); ++i) {
            run_of.try_emplace(rle.run(i).symbol, i);
            if (i + 1 < rle.run_count()) {
                pairs.insert({rle.run(i).symbol, rle.run(i + 1).symbol});
            }
        }
        b.d2.adjacent_pairs.assign(pairs.begin(), pairs.end());
        b.d2.run_of_symbol.assign(run_of.begin(), run_of.end());
        const std::uint64_t sp = b.sigma_prime.size();
        b.d2.count = sp * (sp - (sp ? 1 : 0)) - b.d2.adjacent_pairs.size();
        if (b.d2.count <= threshold) {
            b.d2.use_explicit = true;
            run_m2(b, [&](const MawHandle& h) { b.d2.explicit_list.push_back(h); }, nullptr);
        }
    }

    // D3: 3-run bridge substrings grouped by middle symbol.
    {
        std::map<Symbol, D3Group> groups;
        for (const BridgeOccurrence& occ : bridge_windows(rle, 3, /*aggregate=*/true)) {
            const auto& runs = occ.bridge.runs();
            D3Group& g = groups[runs[1].symbol];
            g.middle = runs[1].symbol;
            g.entries.push_back({runs[0].symbol, runs[1].exponent, runs[2].symbol,
                                 static_cast<std::uint64_t>(occ.run_index + 1)});
        }
        for (auto& [c, g] : groups) {
            std::sort(g.entries.begin(), g.entries.end(), [](const D3Entry& x, const D3Entry& y) {
                return std::tuple(x.exponent, x.left, x.right) <
                       std::tuple(y.exponent, y.left, y.right);
            });
            std::map<Symbol, std::uint64_t> lmax;
            std::map<Symbol, std::pair<std::uint64_t, std::uint64_t>> rmax;
            for (const D3Entry& e : g.entries) {
                auto [lit, lnew] = lmax.try_emplace(e.left, e.exponent);
                if (!lnew) lit->second = std::max(lit->second, e.exponent);
                auto [rit, rnew] = rmax.try_emplace(e.right, std::pair{e.exponent, e.c_run});
                if (!rnew && e.exponent > rit->second.first) {
                    rit->second = {e.exponent, e.c_run};
                }
            }
            g.left_max.assign(lmax.begin(), lmax.end());
            for (const auto& [sym, v] : rmax) g.right_max.emplace_back(sym, v.first, v.second);
            b.d3.groups.push_back(std::move(g));
        }
        b.d3.count = m3_count(b.d3);
        if (b.d3.count <= threshold) {
            b.d3.use_explicit = true;
            run_m3(b.d3, [&](const MawHandle& h) { b.d3.explicit_list.push_back(h); }, nullptr);
            // counting formula and stage walk are independent routes
            if (b.d3.explicit_list.size() != b.d3.count) {
                throw std::logic_error("m3 count does not match the stage walk");
            }
        }
    }

    // D4: bipartite graphs for the bridges with at least two inverse images.
    {
        const KTree tree = build_k_tree(rle);
        b.x_value = tree.x_value;
        b.w_count = tree.w_count;
        for (const KTreeNode& node : tree.nodes) {
            if (!node.expanded || node.k_size() < 2) continue;
            D4Graph g;
            g.window_span = static_cast<std::uint32_t>(node.bridge.run_count()) + 1;

            // First collect the vertex keys so ids follow (exponent, symbol)
            // order, then wire the edges.
            std::map<std::pair<std::uint64_t, Symbol>, std::uint32_t> lids, rids;
            for (std::uint32_t child_id : node.children) {
                const auto& cr = tree.node(child_id).bridge.runs();
                lids.try_emplace({cr[1].exponent, cr.front().symbol}, 0u);
                rids.try_emplace({cr[cr.size() - 2].exponent, cr.back().symbol}, 0u);
            }
            std::uint32_t id = 0;
            for (auto& [key, v] : lids) {
                v = id++;
                g.left.push_back({key.second, key.first});
            }
            id = 0;
            for (auto& [key, v] : rids) {
                v = id++;
                g.right.push_back({key.second, key.first});
            }

            g.right_witness.assign(g.right.size(), 0);
            g.left_max_rexp.assign(g.left.size(), 0);
            g.right_max_lexp.assign(g.right.size(), 0);
            for (std::uint32_t child_id : node.children) {
                const KTreeNode& child = tree.node(child_id);
                const auto& cr = child.bridge.runs();
                const std::uint32_t l = lids.at({cr[1].exponent, cr.front().symbol});
                const std::uint32_t r = rids.at({cr[cr.size() - 2].exponent, cr.back().symbol});
                g.edges.emplace_back(l, r);
                g.right_witness[r] = static_cast<std::uint64_t>(child.occurrences.front() + 1);
                g.left_max_rexp[l] = std::max(g.left_max_rexp[l], g.right[r].exponent);
                g.right_max_lexp[r] = std::max(g.right_max_lexp[r], g.left[l].exponent);
            }
            std::sort(g.edges.begin(), g.edges.end());
            d4_candidate_pairs(g, [&](std::uint32_t l, std::uint32_t r) {
                if (g.left[l].symbol == kSentinel || g.right[r].symbol == kSentinel) return;
                g.maw_count += 1;
            });
            b.d4.count += g.maw_count;
            b.d4.graphs.push_back(std::move(g));
        }
        if (b.d4.count <= threshold) {
            b.d4.use_explicit = true;
            run_m4(b.d4, [&](const MawHandle& h) { b.d4.explicit_list.push_back(h); }, nullptr);
        }
    }

    b.d5 = build_m5(rle);

    b.counts[1] = b.alphabet.size();
    b.counts[2] = b.d2.count;
    b.counts[3] = b.d3.count;
    b.counts[4] = b.d4.count;
    b.counts[5] = b.d5.list.size();
    return b;
}

namespace {

// Left-oriented boundary pass: for every run a^i, find the longest prefix of
// the following text that also follows some a-run of exponent >= i+1, and
// turn the boundary into at most one type-5 candidate. Handles are in the
// coordinates of `rle`.
template <typename Fn>
void m5_directional_pass(const RleString& rle, Fn&& found) {
    const auto m = static_cast<std::int64_t>(rle.run_count());
    std::map<Symbol, std::uint64_t> longest;
    std::map<Symbol, std::vector<std::int64_t>> runs_of;
    for (std::int64_t i = 0; i < m; ++i) {
        const Run& r = rle.run(static_cast<std::size_t>(i));
        auto [it, inserted] = longest.try_emplace(r.symbol, r.exponent);
        if (!inserted) it->second = std::max(it->second, r.exponent);
        runs_of[r.symbol].push_back(i);
    }
    for (std::int64_t q = 0; q < m; ++q) {
        const Symbol a = rle.run(static_cast<std::size_t>(q)).symbol;
        const std::uint64_t i = rle.run(static_cast<std::size_t>(q)).exponent;
        if (longest[a] < i + 1) continue;

        std::uint64_t best_len = 0, best_fr = 0, best_pe = 0;
        for (std::int64_t q2 : runs_of[a]) {
            if (rle.run(static_cast<std::size_t>(q2)).exponent < i + 1) continue;
            std::uint64_t fr = 0, pe = 0, len = 0;
            for (std::int64_t d = 0;; ++d) {
                const Run ra = ext_run(rle, q + 1 + d);
                const Run rb = ext_run(rle, q2 + 1 + d);
                if (ra.symbol == kSentinel || rb.symbol == kSentinel || ra.symbol != rb.symbol) {
                    break;
                }
                if (ra.exponent == rb.exponent) {
                    ++fr;
                    len += ra.exponent;
                    continue;
                }
                const std::uint64_t common = std::min(ra.exponent, rb.exponent);
                len += common;
                if (common == ra.exponent) {
                    ++fr;  // our run matched fully; the other side keeps going
                } else {
                    pe = common;
                }
                break;
            }
            if (len > best_len) {
                best_len = len;
                best_fr = fr;
                best_pe = pe;
            }
        }

        std::uint64_t tail;
        if (best_pe > 0) {
            tail = best_pe + 1;  // next symbol continues the partly matched run
        } else {
            if (q + static_cast<std::int64_t>(best_fr) + 1 >= m) continue;  // next is '$'
            tail = 1;
        }
        found(MawHandle{5, a, i + 1, static_cast<std::uint64_t>(q + 1), best_fr + 1, tail});
    }
}

}  // namespace

D5Rep build_m5(const RleString& rle) {
    D5Rep rep;
    std::set<std::vector<Run>> seen;
    std::vector<Run> buf;
    auto add = [&](const MawHandle& h) {
        expand_into(h, rle, buf);
        if (seen.insert(buf).second) rep.list.push_back(h);
    };

    m5_directional_pass(rle, add);

    std::vector<Run> reversed(rle.runs().rbegin(), rle.runs().rend());
    const RleString rrle = RleString::from_runs(std::move(reversed));
    const std::uint64_t m = rle.run_count();
    m5_directional_pass(rrle, [&](const MawHandle& h) {
        // Mirror a handle found on the reversed runs back into real
        // coordinates: the reversed window's last run becomes the lead run.
        const std::uint64_t w = h.run_index, s = h.run_span;
        add(MawHandle{5, rle.run(static_cast<std::size_t>(m - s - w)).symbol, h.tail_exponent,
                      m - s - w + 1, s, h.lead_count});
    });
    return rep;
}

void enum_m1(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    const auto& lr = bundle.d1.longest_runs;
    for (Symbol c : bundle.alphabet) {
        tick(ops);
        const auto it = std::lower_bound(
            lr.begin(), lr.end(), c,
            [](const std::pair<Symbol, std::uint64_t>& e, Symbol s) { return e.first < s; });
        if (it != lr.end() && it->first == c) {
            sink({1, c, it->second + 1, 0, 0, it->second + 1});
        } else {
            sink({1, c, 1, 0, 0, 1});
        }
    }
}

void enum_m2(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    if (bundle.d2.use_explicit) {
        for (const MawHandle& h : bundle.d2.explicit_list) {
            tick(ops);
            sink(h);
        }
        return;
    }
    run_m2(bundle, sink, ops);
}

void enum_m3(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    if (bundle.d3.use_explicit) {
        for (const MawHandle& h : bundle.d3.explicit_list) {
            tick(ops);
            sink(h);
        }
        return;
    }
    run_m3(bundle.d3, sink, ops);
}

void enum_m4(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    if (bundle.d4.use_explicit) {
        for (const MawHandle& h : bundle.d4.explicit_list) {
            tick(ops);
            sink(h);
        }
        return;
    }
    run_m4(bundle.d4, sink, ops);
}

void enum_m5(const ReprBundle& bundle, const MawSink& sink, OpCounter* ops) {
    for (const MawHandle& h : bundle.d5.list) {
        tick(ops);
        sink(h);
    }
}

void enumerate_all(const ReprBundle& bundle, const MawSink& sink, std::uint32_t type_mask,
                   OpCounter* ops) {
    if (type_mask & type_bit(1)) enum_m1(bundle, sink, ops);
    if (type_mask & type_bit(2)) enum_m2(bundle, sink, ops);
    if (type_mask & type_bit(3)) enum_m3(bundle, sink, ops);
    if (type_mask & type_bit(4)) enum_m4(bundle, sink, ops);
    if (type_mask & type_bit(5)) enum_m5(bundle, sink, ops);
}

std::vector<MawRecord> enumerate_records(const ReprBundle& bundle, std::uint32_t type_mask) {
    std::vector<MawRecord> out;
    enumerate_all(bundle, [&](const MawHandle& h) {
        MawRecord rec;
        rec.rle_form = expand(h, bundle.rle);
        rec.word = rec.rle_form.decode();
        rec.type_id = static_cast<int>(h.type_id);
        out.push_back(std::move(rec));
    }, type_mask);
    return out;
}

SpaceReport space_words(const ReprBundle& bundle) {
    constexpr std::uint64_t kHandleWords = 6;
    SpaceReport r;
    r.rle = 2 * bundle.rle.run_count();
    r.alphabet = bundle.alphabet.size() + bundle.sigma_prime.size();
    r.d1 = 2 * bundle.d1.longest_runs.size();
    r.d2 = 2 * bundle.d2.adjacent_pairs.size() + 2 * bundle.d2.run_of_symbol.size() +
           kHandleWords * bundle.d2.explicit_list.size() + 1;
    r.d3 = kHandleWords * bundle.d3.explicit_list.size() + 1;
    for (const D3Group& g : bundle.d3.groups) {
        r.d3 += 1 + 4 * g.entries.size() + 2 * g.left_max.size() + 3 * g.right_max.size();
    }
    r.d4 = kHandleWords * bundle.d4.explicit_list.size() + 1;
    for (const D4Graph& g : bundle.d4.graphs) {
        r.d4 += 2 * (g.left.size() + g.right.size()) + 2 * g.edges.size() +
                g.left_max_rexp.size() + g.right_max_lexp.size() + g.right_witness.size() + 2;
    }
    r.d5 = kHandleWords * bundle.d5.list.size();
    return r;
}

}  // namespace rlemaw
