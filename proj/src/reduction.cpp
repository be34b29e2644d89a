#include "treelab/reduction.hpp"

namespace treelab {

const char* mode_name(ReductionMode mode) {
    switch (mode) {
        case ReductionMode::Leaves: return "leaves";
        case ReductionMode::Paths: return "paths";
        case ReductionMode::OldLeaves: return "old-leaves";
        case ReductionMode::OldPaths: return "old-paths";
    }
    return "?";
}

std::optional<ReductionMode> mode_from_name(std::string_view name) {
    if (name == "leaves") return ReductionMode::Leaves;
    if (name == "paths") return ReductionMode::Paths;
    if (name == "old-leaves") return ReductionMode::OldLeaves;
    if (name == "old-paths") return ReductionMode::OldPaths;
    return std::nullopt;
}

namespace {

PlaneTree strip_leaves(const PlaneTree& t) {
    PlaneTree out;
    out.children.reserve(t.children.size());
    for (const auto& c : t.children)
        if (!c.children.empty()) out.children.push_back(strip_leaves(c));
    return out;
}

struct PathCut {
    bool is_path;
    PlaneTree kept;
};

// One pass: computes whether the subtree is a path and the tree with all
// path subtrees removed.
PathCut strip_paths(const PlaneTree& t) {
    PathCut r;
    r.is_path = t.children.empty() || t.children.size() == 1;
    for (const auto& c : t.children) {
        PathCut rc = strip_paths(c);
        if (t.children.size() == 1) r.is_path = rc.is_path;
        if (!rc.is_path) r.kept.children.push_back(std::move(rc.kept));
    }
    return r;
}

PlaneTree strip_old_leaves(const PlaneTree& t) {
    PlaneTree out;
    for (size_t i = 0; i < t.children.size(); ++i) {
        const auto& c = t.children[i];
        if (i == 0 && c.children.empty()) continue;
        out.children.push_back(strip_old_leaves(c));
    }
    return out;
}

PathCut strip_old_paths(const PlaneTree& t) {
    PathCut r;
    r.is_path = t.children.empty() || t.children.size() == 1;
    for (size_t i = 0; i < t.children.size(); ++i) {
        PathCut rc = strip_old_paths(t.children[i]);
        if (t.children.size() == 1) r.is_path = rc.is_path;
        if (i == 0 && rc.is_path) continue;
        r.kept.children.push_back(std::move(rc.kept));
    }
    return r;
}

}  // namespace

std::optional<PlaneTree> reduce_once(const PlaneTree& tree, ReductionMode mode) {
    switch (mode) {
        case ReductionMode::Leaves:
            if (tree.children.empty()) return std::nullopt;
            return strip_leaves(tree);
        case ReductionMode::Paths: {
            PathCut r = strip_paths(tree);
            if (r.is_path) return std::nullopt;
            return std::move(r.kept);
        }
        case ReductionMode::OldLeaves:
            return strip_old_leaves(tree);
        case ReductionMode::OldPaths:
            return std::move(strip_old_paths(tree).kept);
    }
    return std::nullopt;
}

ReductionOutcome reduce_iter(const PlaneTree& tree, ReductionMode mode, int rounds) {
    if (rounds < 0) throw std::invalid_argument("reduce_iter: negative round count");
    ReductionOutcome out;
    out.final_tree = tree;
    out.per_round.push_back(tree_metrics(tree));
    for (int j = 0; j < rounds; ++j) {
        std::optional<PlaneTree> next = reduce_once(out.final_tree, mode);
        if (!next) {
            out.survived = false;
            out.final_size = 0;
            return out;
        }
        out.final_tree = std::move(*next);
        out.per_round.push_back(tree_metrics(out.final_tree));
        out.rounds_applied = j + 1;
    }
    out.survived = true;
    out.final_size = out.per_round.back().size;
    return out;
}

long long total_paths(const PlaneTree& tree) {
    long long total = 0;
    PlaneTree t = tree;
    for (;;) {
        TreeMetrics m = tree_metrics(t);
        total += m.leaf_count;
        if (m.is_path) return total;
        t = *reduce_once(t, ReductionMode::Paths);
    }
}

long long total_old_path_segments(const PlaneTree& tree) {
    long long total = 0;
    PlaneTree t = tree;
    for (;;) {
        TreeMetrics m = tree_metrics(t);
        total += m.old_leaf_count;
        if (m.size == 1) return total;
        t = *reduce_once(t, ReductionMode::OldPaths);
    }
}

}  // namespace treelab
