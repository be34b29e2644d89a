#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treelab {

/// Rooted plane tree; empty children sequence means the node is a leaf.
/// Trees are plain values, all operations on them are pure.
struct PlaneTree {
    std::vector<PlaneTree> children;
    bool operator==(const PlaneTree&) const = default;
};

struct TreeParseError : std::runtime_error {
    TreeParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (position " + std::to_string(position) + ")"), position(position) {}
    size_t position;
};

/// Parse the canonical parentheses encoding (node = "(" children ")").
PlaneTree parse_tree(std::string_view text);

/// Inverse of parse_tree.
std::string serialize_tree(const PlaneTree& tree);

struct TreeMetrics {
    int size = 0;
    int leaf_count = 0;       // the childless root counts as a leaf
    int inner_count = 0;      // size - leaf_count
    int old_leaf_count = 0;   // leaves that are the leftmost child of their parent
    int node_height = 0;      // number of levels; single node has height 1
    bool is_path = false;     // every node has at most one child
    bool operator==(const TreeMetrics&) const = default;
};

/// All structural metrics in one traversal.
TreeMetrics tree_metrics(const PlaneTree& tree);

int tree_size(const PlaneTree& tree);

}  // namespace treelab
