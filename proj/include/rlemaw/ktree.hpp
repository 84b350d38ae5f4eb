#pragma once

#include <cstdint>
#include <optional>

#include "rlemaw/rle.hpp"

namespace rlemaw {

/// One bridge substring of the sentinel-extended text, with the start indices
/// (sentinel-extended run coordinates) of all its occurrence windows.
struct KTreeNode {
    RleString bridge;
    std::vector<std::int64_t> occurrences;
    std::vector<std::uint32_t> children;
    std::uint32_t depth = 0;
    bool is_root = false;
    bool expanded = false;  // children were computed

    std::uint64_t occ_count() const { return occurrences.size(); }
    std::uint64_t k_size() const { return children.size(); }
};

/// Inverse-image tree of the interior operator, rooted at the aggregated
/// 2-run and 3-run bridge substrings. A node's children group its
/// occurrences by the (left symbol, left exponent, right exponent, right
/// symbol) of the one-run extension; occurrences touching a sentinel run
/// have no extension and bridges containing the sentinel are leaves.
///
/// Nodes are expanded when they are roots or occur at least twice (a
/// once-occurring bridge cannot head a subtree with a multi-child node, so
/// pruning there loses nothing).
struct KTree {
    std::vector<KTreeNode> nodes;
    std::vector<std::uint32_t> roots;

    // W = roots plus every node with >= 2 children; X = total children over W.
    std::uint64_t w_count = 0;
    std::uint64_t x_value = 0;
    std::uint64_t root_occurrence_total = 0;  // sum of #w over B2 u B3

    const KTreeNode& node(std::uint32_t id) const { return nodes[id]; }
};

KTree build_k_tree(const RleString& rle);

/// #w - sum over children z of (#z - 1); equals |K(w)| at every expanded
/// sentinel-free node (every occurrence of such a node has an extension).
std::optional<std::int64_t> occurrence_identity_rhs(const KTree& tree, std::uint32_t id);

}  // namespace rlemaw
