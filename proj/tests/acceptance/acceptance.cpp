// Acceptance suite: one check per numbered criterion, one PASS/FAIL line
// each, nonzero exit when anything fails. The heavy corpora (exhaustive
// short strings, 1e5 random strings) are shared across criteria and
// processed in parallel.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "rlemaw/bounds.hpp"
#include "rlemaw/repr.hpp"

using namespace rlemaw;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::uint64_t elapsed_ns(clock_type::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - start).count());
}

std::string word_str(std::span<const Symbol> w) {
    std::string out;
    for (Symbol s : w) out.push_back(static_cast<char>(s));
    return out;
}

// ---------------------------------------------------------------------------
// Shared corpus processing

struct CorpusStats {
    std::uint64_t strings = 0;
    std::uint64_t oracle_mismatches = 0;
    std::uint64_t expand_mismatches = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t identity_violations = 0;
    std::uint64_t block_violations = 0;
    std::uint64_t algo_mismatches = 0;
    double max_ops_ratio = 0.0;
    std::map<std::string, double> max_slack;

    void merge(const CorpusStats& o) {
        strings += o.strings;
        oracle_mismatches += o.oracle_mismatches;
        expand_mismatches += o.expand_mismatches;
        bound_violations += o.bound_violations;
        identity_violations += o.identity_violations;
        block_violations += o.block_violations;
        algo_mismatches += o.algo_mismatches;
        max_ops_ratio = std::max(max_ops_ratio, o.max_ops_ratio);
        for (const auto& [k, v] : o.max_slack) {
            auto [it, inserted] = max_slack.try_emplace(k, v);
            if (!inserted) it->second = std::max(it->second, v);
        }
    }
};

// Brute-force evaluation of the three graph conditions over V_L x V_R.
std::set<std::pair<std::uint32_t, std::uint32_t>> graph_pairs_bruteforce(const D4Graph& g) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges(g.edges.begin(), g.edges.end());
    std::set<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t l = 0; l < g.left.size(); ++l) {
        for (std::uint32_t r = 0; r < g.right.size(); ++r) {
            if (edges.count({l, r})) continue;
            if (g.right[r].exponent > g.left_max_rexp[l]) continue;
            if (g.left[l].exponent > g.right_max_lexp[r]) continue;
            out.insert({l, r});
        }
    }
    return out;
}

void check_slack(CorpusStats& stats, const char* name, std::uint64_t count, std::uint64_t bound) {
    const double ratio =
        bound == 0 ? (count == 0 ? 0.0 : 2.0) : static_cast<double>(count) / static_cast<double>(bound);
    auto [it, inserted] = stats.max_slack.try_emplace(name, ratio);
    if (!inserted) it->second = std::max(it->second, ratio);
    if (count > bound) stats.bound_violations += 1;
}

void process_string(std::span<const Symbol> text, bool with_oracle, CorpusStats& stats) {
    const RleString rle = RleString::encode(text);
    const ReprBundle bundle = build(rle);
    const std::uint64_t m = rle.run_count();

    OpCounter ops;
    std::uint64_t emitted = 0;
    std::multiset<std::pair<int, std::vector<Symbol>>> got_set;
    std::vector<Run> buf;
    enumerate_all(bundle, [&](const MawHandle& h) {
        ++emitted;
        if (with_oracle) {
            expand_into(h, bundle.rle, buf);
            got_set.insert({static_cast<int>(h.type_id), RleString::from_runs(buf).decode()});
        }
    }, kAllTypes, &ops);

    stats.strings += 1;
    if (emitted + m > 0) {
        stats.max_ops_ratio =
            std::max(stats.max_ops_ratio,
                     static_cast<double>(ops.ops) / static_cast<double>(emitted + m));
    }

    if (with_oracle) {
        std::multiset<std::pair<int, std::vector<Symbol>>> want;
        for (const auto& rec : maws_bruteforce(text, bundle.alphabet)) {
            want.insert({rec.type_id, rec.word});
        }
        if (got_set != want) {
            stats.oracle_mismatches += 1;
            stats.expand_mismatches += 1;  // expansion and oracle words diverge together
        }
    }

    const std::uint64_t sp = bundle.sigma_prime.size();
    if (bundle.counts[1] != bundle.alphabet.size()) stats.bound_violations += 1;
    check_slack(stats, "m2<=s'(s'-1)", bundle.counts[2], sp * (sp ? sp - 1 : 0));
    check_slack(stats, "m5<=2(m+1)", bundle.counts[5], 2 * (m + 1));
    check_slack(stats, "X<=2(2m+1)", bundle.x_value, 2 * (2 * m + 1));
    check_slack(stats, "m4<=X^2", bundle.counts[4], bundle.x_value * bundle.x_value);

    // criterion 6: K-tree identities and the per-graph pair walk
    const KTree tree = build_k_tree(rle);
    for (std::uint32_t id = 0; id < tree.nodes.size(); ++id) {
        const auto rhs = occurrence_identity_rhs(tree, id);
        if (rhs && static_cast<std::int64_t>(tree.node(id).k_size()) != *rhs) {
            stats.identity_violations += 1;
        }
    }
    for (std::uint32_t root : tree.roots) {
        std::uint64_t black = 0;
        std::vector<std::uint32_t> stack(tree.node(root).children.begin(),
                                         tree.node(root).children.end());
        while (!stack.empty()) {
            const std::uint32_t id = stack.back();
            stack.pop_back();
            if (tree.node(id).k_size() >= 2) ++black;
            stack.insert(stack.end(), tree.node(id).children.begin(),
                         tree.node(id).children.end());
        }
        if (black > tree.node(root).occ_count()) stats.block_violations += 1;
    }
    for (const D4Graph& g : bundle.d4.graphs) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> walked;
        d4_candidate_pairs(g, [&](std::uint32_t l, std::uint32_t r) { walked.insert({l, r}); });
        if (walked != graph_pairs_bruteforce(g)) stats.algo_mismatches += 1;
    }
}

std::vector<Symbol> string_from_index(std::size_t length, std::size_t sigma, std::uint64_t index) {
    std::vector<Symbol> text(length);
    for (std::size_t i = 0; i < length; ++i) {
        text[i] = static_cast<Symbol>('a' + index % sigma);
        index /= sigma;
    }
    return text;
}

unsigned worker_count() {
    return std::max(2u, std::thread::hardware_concurrency());
}

CorpusStats run_exhaustive_corpus(std::size_t max_binary, std::size_t max_ternary) {
    struct Job {
        std::size_t length;
        std::size_t sigma;
        std::uint64_t begin, end;
    };
    std::vector<Job> jobs;
    auto add_jobs = [&](std::size_t max_len, std::size_t sigma) {
        for (std::size_t len = 0; len <= max_len; ++len) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < len; ++i) total *= sigma;
            const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 16);
            for (std::uint64_t b = 0; b < total; b += chunk) {
                jobs.push_back({len, sigma, b, std::min(total, b + chunk)});
            }
        }
    };
    add_jobs(max_binary, 2);
    add_jobs(max_ternary, 3);

    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    CorpusStats total;
    auto worker = [&] {
        CorpusStats local;
        while (true) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) break;
            const Job& job = jobs[j];
            for (std::uint64_t idx = job.begin; idx < job.end; ++idx) {
                const auto text = string_from_index(job.length, job.sigma, idx);
                process_string(text, /*with_oracle=*/true, local);
            }
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
    };
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < worker_count(); ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return total;
}

CorpusStats run_random_corpus(std::uint64_t count) {
    std::atomic<std::uint64_t> next{0};
    std::mutex merge_mutex;
    CorpusStats total;
    auto worker = [&] {
        CorpusStats local;
        while (true) {
            const std::uint64_t i = next.fetch_add(256);
            if (i >= count) break;
            for (std::uint64_t k = i; k < std::min(count, i + 256); ++k) {
                std::mt19937_64 rng(0x5eed0000 + k);  // per-string seed, order-independent
                const auto text = random_string(rng);
                process_string(text, /*with_oracle=*/k % 64 == 0, local);
            }
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
    };
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < worker_count(); ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return total;
}

// ---------------------------------------------------------------------------
// criterion 1

void criterion_1() {
    const auto start = clock_type::now();
    const std::string text = "bbacccbaa";
    const std::vector<Symbol> symbols(text.begin(), text.end());
    const ReprBundle bundle = build(RleString::encode(symbols));

    const std::map<int, std::set<std::string>> pinned{
        {1, {"aaa", "bbb", "cccc"}},
        {2, {"ca", "bc"}},
        {3, {"acb", "accb"}},
        {4, {"cbac"}},
        {5, {"bbaa"}},
    };
    std::map<int, std::set<std::string>> got;
    for (const auto& rec : enumerate_records(bundle)) {
        got[rec.type_id].insert(word_str(rec.word));
    }
    std::ostringstream detail;
    bool pass = true;
    for (int t = 1; t <= 5; ++t) {
        const auto& want = pinned.at(t);
        if (got[t] != want) {
            pass = false;
            detail << " M" << t << " expected {";
            for (const auto& w : want) detail << w << ' ';
            detail << "} got {";
            for (const auto& w : got[t]) detail << w << ' ';
            detail << "};";
        }
    }
    const bool in_time = elapsed_ns(start) < 1'000'000'000ull;
    if (!in_time) {
        pass = false;
        detail << " over 1s;";
    }
    // The pinned M2/M5 sets omit ab, aac and cbb, which satisfy the MAW
    // definition for this text; the brute-force oracle agrees with the
    // enumeration (criterion 2 covers this string). See the test log.
    std::multiset<std::string> oracle_words;
    for (const auto& rec : maws_bruteforce(symbols, bundle.sigma_prime)) {
        oracle_words.insert(word_str(rec.word));
    }
    std::multiset<std::string> enum_words;
    for (const auto& rec : enumerate_records(bundle)) enum_words.insert(word_str(rec.word));
    detail << " oracle agreement: " << (oracle_words == enum_words ? "yes" : "NO");
    report(1, "running-example exactness", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 2 (+ shared corpus results for 5, 6, 7, 8)

CorpusStats g_exhaustive;
CorpusStats g_random;

void criterion_2() {
    const auto start = clock_type::now();
    g_exhaustive = run_exhaustive_corpus(14, 10);
    std::ostringstream detail;
    detail << g_exhaustive.strings << " strings, " << g_exhaustive.oracle_mismatches
           << " mismatches, " << elapsed_ns(start) / 1'000'000 << " ms";
    report(2, "exhaustive oracle equivalence (|ab|<=14, |abc|<=10)",
           g_exhaustive.oracle_mismatches == 0, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 3

void criterion_3() {
    std::ostringstream detail;
    bool pass = true;

    // |M2| on m2-perm
    for (std::uint64_t sp = 3; sp <= 26; ++sp) {
        const auto bundle = build(RleString::encode(gen_family({FamilyKind::M2Perm, sp})));
        if (bundle.counts[2] != sp * (sp - 2) + 1) {
            pass = false;
            detail << " m2-perm(" << sp << ")=" << bundle.counts[2] << "!=" << sp * (sp - 2) + 1
                   << ";";
            break;
        }
    }

    // |M3| = n-3 on m3-run; every n up to 2048 plus a sampled tail to 1e6
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = 4; n <= 2048; ++n) grid.push_back(n);
    for (std::uint64_t n : {4096, 16384, 65536, 262144, 1000000}) grid.push_back(n);
    for (std::uint64_t n : grid) {
        const auto bundle = build(RleString::encode(gen_family({FamilyKind::M3Run, n})));
        std::uint64_t enumerated = 0;
        enum_m3(bundle, [&](const MawHandle&) { ++enumerated; });
        if (bundle.counts[3] != n - 3 || enumerated != n - 3) {
            pass = false;
            detail << " m3-run(" << n << ")=" << enumerated << "!=" << n - 3 << ";";
            break;
        }
    }

    // |M4| and m on m4-grid; |M5| on m5-stairs. The spec pins the published
    // family counts; the brute-force oracle disagrees with those (see the
    // decisions ledger), so these sub-checks document the divergence.
    std::uint64_t m4_bad = 0, m5_bad = 0;
    std::string m4_first, m5_first;
    for (std::uint64_t p = 2; p <= 50; ++p) {
        const auto grid_bundle = build(RleString::encode(gen_family({FamilyKind::M4Grid, p})));
        if (grid_bundle.rle.run_count() != 3 * p + 1) {
            pass = false;
            detail << " m4-grid(" << p << ") m!=" << 3 * p + 1 << ";";
        }
        if (grid_bundle.counts[4] != p * (p - 1) / 2) {
            if (m4_bad++ == 0) {
                m4_first = "p=" + std::to_string(p) + " got " +
                           std::to_string(grid_bundle.counts[4]) + " expected " +
                           std::to_string(p * (p - 1) / 2);
            }
        }
        const auto stairs_bundle =
            build(RleString::encode(gen_family({FamilyKind::M5Stairs, p})));
        if (stairs_bundle.rle.run_count() != 3 * p + 1) {
            pass = false;
            detail << " m5-stairs(" << p << ") m!=" << 3 * p + 1 << ";";
        }
        if (stairs_bundle.counts[5] != 2 * p) {
            if (m5_bad++ == 0) {
                m5_first = "p=" + std::to_string(p) + " got " +
                           std::to_string(stairs_bundle.counts[5]) + " expected " +
                           std::to_string(2 * p);
            }
        }
    }
    if (m4_bad) {
        pass = false;
        detail << " |M4|=p(p-1)/2 fails for " << m4_bad << "/49 sizes (first: " << m4_first
               << "; oracle-confirmed true count (p-1)^2+2);";
    }
    if (m5_bad) {
        pass = false;
        detail << " |M5|=2p fails for " << m5_bad << "/49 sizes (first: " << m5_first
               << "; oracle-confirmed true count 4p-5);";
    }
    if (pass) detail << "all closed forms exact";
    report(3, "closed-form family counts", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 4

void criterion_4() {
    const std::vector<std::uint64_t> sizes{1000,   3000,   10000,  30000,
                                           100000, 300000, 1000000};
    std::vector<std::uint64_t> space(sizes.size());
    std::vector<double> time_ns(sizes.size());
    std::vector<double> counts(sizes.size());

    std::uint64_t checksum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto bundle = build(RleString::encode(gen_family({FamilyKind::M3Run, sizes[i]})));
        space[i] = space_words(bundle).total();
        std::uint64_t emitted = 0;
        auto run_once = [&] {
            emitted = 0;
            enumerate_all(bundle, [&](const MawHandle& h) {
                checksum += h.lead_count;
                ++emitted;
            });
        };
        run_once();  // warmup
        // Best-of-rounds: the minimum is the estimate least sensitive to
        // scheduler interference.
        const std::uint64_t reps = std::max<std::uint64_t>(3, 2'000'000 / sizes[i]);
        double best = 1e300;
        for (int round = 0; round < 9; ++round) {
            const auto start = clock_type::now();
            for (std::uint64_t r = 0; r < reps; ++r) run_once();
            best = std::min(best,
                            static_cast<double>(elapsed_ns(start)) / static_cast<double>(reps));
        }
        time_ns[i] = best;
        counts[i] = static_cast<double>(emitted);
    }
    if (checksum == 42) std::cerr << "";  // defeat dead-code elimination

    bool pass = true;
    std::ostringstream detail;
    detail << "space_words={";
    for (std::uint64_t s : space) detail << s << ' ';
    detail << "}";
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (space[i] != space[0]) pass = false;
    }

    // Output-sensitive model: time = b * count, fitted least-squares through
    // the origin (an intercept-ful fit over points spanning three decades
    // leaves the intercept, and with it the smallest point's prediction,
    // unconstrained).
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        sxx += counts[i] * counts[i];
        sxy += counts[i] * time_ns[i];
    }
    const double b = sxy / sxx;
    double ss_res = 0, ss_tot = 0, sy = 0;
    for (double t : time_ns) sy += t;
    const double mean = sy / static_cast<double>(sizes.size());
    double worst_ratio = 1.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double predicted = b * counts[i];
        ss_res += (time_ns[i] - predicted) * (time_ns[i] - predicted);
        ss_tot += (time_ns[i] - mean) * (time_ns[i] - mean);
        const double ratio = std::max(time_ns[i] / predicted, predicted / time_ns[i]);
        worst_ratio = std::max(worst_ratio, ratio);
    }
    const double r2 = 1.0 - ss_res / ss_tot;
    if (r2 < 0.95) pass = false;
    if (worst_ratio > 2.0) pass = false;
    detail << " R^2=" << r2 << " worst_point_ratio=" << worst_ratio << " ns/maw=" << b;
    report(4, "O(m) space with output-sensitive time on the m3-run family", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 5

void criterion_5() {
    const auto start = clock_type::now();
    g_random = run_random_corpus(100000);
    std::ostringstream detail;
    const std::uint64_t violations = g_random.bound_violations + g_exhaustive.bound_violations;
    detail << g_random.strings << " random + " << g_exhaustive.strings
           << " exhaustive strings, " << violations << " violations; max slacks:";
    CorpusStats combined;
    combined.merge(g_random);
    combined.merge(g_exhaustive);
    for (const auto& [name, ratio] : combined.max_slack) {
        detail << ' ' << name << '=' << ratio;
    }
    detail << "; " << elapsed_ns(start) / 1'000'000 << " ms";
    report(5, "counting-bound audits never fire", violations == 0, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 6

void criterion_6() {
    CorpusStats combined;
    combined.merge(g_random);
    combined.merge(g_exhaustive);
    std::ostringstream detail;
    detail << "identity violations " << combined.identity_violations << ", block-bound violations "
           << combined.block_violations << ", graph-walk mismatches " << combined.algo_mismatches
           << " over " << combined.strings << " strings";
    report(6, "K-tree identities and graph walk vs brute force",
           combined.identity_violations + combined.block_violations + combined.algo_mismatches ==
               0,
           detail.str());
}

// ---------------------------------------------------------------------------
// criterion 7

std::vector<Symbol> chain_family(std::size_t k) {
    // g d(ab)^k ef h d(ab)^k ef j: yields a type-4 MAW with 2k+5 runs.
    std::vector<Symbol> text;
    auto block = [&](Symbol tail) {
        text.push_back('d');
        for (std::size_t i = 0; i < k; ++i) {
            text.push_back('a');
            text.push_back('b');
        }
        text.push_back('e');
        text.push_back('f');
        text.push_back(tail);
    };
    text.push_back('g');
    block('h');
    block('j');
    return text;
}

void criterion_7() {
    bool pass = sizeof(MawHandle) <= 6 * sizeof(std::uint64_t);
    std::ostringstream detail;
    detail << "sizeof(handle)=" << sizeof(MawHandle) << "B (<=48)";

    // Expansion equals the oracle across the exhaustive corpus (criterion 2
    // bookkeeping) -- re-reported here.
    if (g_exhaustive.expand_mismatches != 0) pass = false;
    detail << ", expand-vs-oracle mismatches " << g_exhaustive.expand_mismatches;

    // Timing: group handles by run count and demand per-run cost within 3x
    // of an affine fit in R.
    std::map<std::uint64_t, std::pair<double, double>> groups;  // R -> (ns total, samples)
    std::vector<Run> buf;
    for (std::size_t k : {1, 2, 4, 8, 12, 16, 24, 32}) {
        const auto text = chain_family(k);
        const ReprBundle bundle = build(RleString::encode(text));
        std::vector<MawHandle> handles;
        enumerate_all(bundle, [&](const MawHandle& h) { handles.push_back(h); });
        for (const MawHandle& h : handles) {
            expand_into(h, bundle.rle, buf);
            const std::uint64_t r = buf.size();
            const std::uint64_t reps = 200'000 / (r + 4) + 1;
            double best = 1e300;
            for (int round = 0; round < 5; ++round) {
                const auto start = clock_type::now();
                for (std::uint64_t i = 0; i < reps; ++i) expand_into(h, bundle.rle, buf);
                best = std::min(best, static_cast<double>(elapsed_ns(start)) /
                                          static_cast<double>(reps));
            }
            auto& g = groups[r];
            g.first += best;
            g.second += 1;
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (const auto& [r, acc] : groups) {
        const double t = acc.first / acc.second;
        sx += static_cast<double>(r);
        sy += t;
        sxx += static_cast<double>(r) * static_cast<double>(r);
        sxy += static_cast<double>(r) * t;
        n += 1;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double worst = 1.0;
    for (const auto& [r, acc] : groups) {
        const double t = acc.first / acc.second;
        const double predicted = intercept + slope * static_cast<double>(r);
        if (predicted > 0 && t > 0) {
            worst = std::max(worst, std::max(t / predicted, predicted / t));
        }
    }
    if (slope <= 0) pass = false;
    if (worst > 3.0) pass = false;
    detail << ", R groups " << groups.size() << " (max R "
           << (groups.empty() ? 0 : groups.rbegin()->first) << "), ns/run=" << slope
           << ", worst fit ratio " << worst;
    report(7, "constant-size handles with O(R(w)) expansion", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 8

void criterion_8() {
    CorpusStats combined;
    combined.merge(g_random);
    combined.merge(g_exhaustive);
    // Include the family strings, whose shapes differ from the random corpus.
    for (std::uint64_t p = 2; p <= 50; ++p) {
        process_string(gen_family({FamilyKind::M4Grid, p}), false, combined);
        process_string(gen_family({FamilyKind::M5Stairs, p}), false, combined);
    }
    for (std::uint64_t n : {100, 10000, 1000000}) {
        process_string(gen_family({FamilyKind::M3Run, n}), false, combined);
    }
    std::ostringstream detail;
    detail << "C=" << combined.max_ops_ratio << " (<=64) over " << combined.strings
           << " strings";
    report(8, "output-sensitivity proxy: ops <= C(|MAW|+m)", combined.max_ops_ratio <= 64.0,
           detail.str());
}

}  // namespace

int main() {
    const auto start = clock_type::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(g_failures))
              << " (total " << elapsed_ns(start) / 1'000'000'000 << " s)" << std::endl;
    if (g_failures) {
        std::cout << "note: criteria 1 and 3 pin expected values copied from the reference\n"
                     "material; the brute-force oracle confirms the enumerated results and\n"
                     "criterion 2 covers the same inputs. See README (acceptance section)."
                  << std::endl;
    }
    return g_failures == 0 ? 0 : 1;
}
