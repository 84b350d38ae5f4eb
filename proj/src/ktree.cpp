#include "rlemaw/ktree.hpp"

#include <deque>
#include <map>

namespace rlemaw {

namespace {

// Child grouping key: the one-run extension of an occurrence window, with the
// window's own end exponents restored to their full values.
struct ExtKey {
    Symbol left_symbol;
    std::uint64_t left_exponent;
    std::uint64_t right_exponent;
    Symbol right_symbol;

    friend auto operator<=>(const ExtKey&, const ExtKey&) = default;
};

RleString child_bridge(const RleString& rle, std::int64_t start, std::int64_t span) {
    std::vector<Run> runs;
    runs.reserve(static_cast<std::size_t>(span));
    for (std::int64_t i = start; i < start + span; ++i) runs.push_back(ext_run(rle, i));
    runs.front().exponent = 1;
    runs.back().exponent = 1;
    return RleString::from_runs(std::move(runs));
}

}  // namespace

KTree build_k_tree(const RleString& rle) {
    KTree tree;
    const auto m = static_cast<std::int64_t>(rle.run_count());

    for (std::size_t ell : {2u, 3u}) {
        for (BridgeOccurrence& occ : bridge_windows(rle, ell, /*aggregate=*/true)) {
            KTreeNode node;
            node.bridge = std::move(occ.bridge);
            node.is_root = true;
            tree.root_occurrence_total += occ.count;
            tree.roots.push_back(static_cast<std::uint32_t>(tree.nodes.size()));
            tree.nodes.push_back(std::move(node));
        }
    }
    // Re-collect per-occurrence windows into the aggregated roots.
    {
        std::map<std::vector<Run>, std::uint32_t> root_of;
        for (std::uint32_t id : tree.roots) root_of.emplace(tree.nodes[id].bridge.runs(), id);
        for (std::size_t ell : {2u, 3u}) {
            for (const BridgeOccurrence& occ : bridge_windows(rle, ell, /*aggregate=*/false)) {
                tree.nodes[root_of.at(occ.bridge.runs())].occurrences.push_back(occ.run_index);
            }
        }
    }

    std::deque<std::uint32_t> queue(tree.roots.begin(), tree.roots.end());
    while (!queue.empty()) {
        const std::uint32_t id = queue.front();
        queue.pop_front();
        // Copy what we need; growing tree.nodes below invalidates references.
        const auto span = static_cast<std::int64_t>(tree.nodes[id].bridge.run_count());
        const std::vector<std::int64_t> occs = tree.nodes[id].occurrences;
        const std::uint32_t depth = tree.nodes[id].depth;

        tree.nodes[id].expanded = true;
        std::map<ExtKey, std::vector<std::int64_t>> groups;
        for (std::int64_t s : occs) {
            if (s < 0 || s + span - 1 >= m) continue;  // window touches a sentinel run
            groups[{ext_run(rle, s - 1).symbol, ext_run(rle, s).exponent,
                    ext_run(rle, s + span - 1).exponent, ext_run(rle, s + span).symbol}]
                .push_back(s - 1);
        }
        for (auto& [key, child_occs] : groups) {
            KTreeNode child;
            child.bridge = child_bridge(rle, child_occs.front(), span + 2);
            child.occurrences = std::move(child_occs);
            child.depth = depth + 1;
            const auto child_id = static_cast<std::uint32_t>(tree.nodes.size());
            tree.nodes[id].children.push_back(child_id);
            if (child.occurrences.size() >= 2) queue.push_back(child_id);
            tree.nodes.push_back(std::move(child));
        }
        const KTreeNode& node = tree.nodes[id];
        if (node.is_root || node.k_size() >= 2) {
            tree.w_count += 1;
            tree.x_value += node.k_size();
        }
    }
    return tree;
}

std::optional<std::int64_t> occurrence_identity_rhs(const KTree& tree, std::uint32_t id) {
    const KTreeNode& node = tree.node(id);
    if (!node.expanded || node.bridge.contains_sentinel()) return std::nullopt;
    std::int64_t rhs = static_cast<std::int64_t>(node.occ_count());
    for (std::uint32_t child : node.children) {
        rhs -= static_cast<std::int64_t>(tree.node(child).occ_count()) - 1;
    }
    return rhs;
}

}  // namespace rlemaw
