#pragma once

#include <optional>

#include "treelab/plane_tree.hpp"

namespace treelab {

enum class ReductionMode { Leaves, Paths, OldLeaves, OldPaths };

const char* mode_name(ReductionMode mode);
std::optional<ReductionMode> mode_from_name(std::string_view name);

/// One simultaneous reduction round; membership in the removal set is decided
/// on the input tree, the root is never removed.
///   Leaves:    every leaf removed; undefined on the single node.
///   Paths:     every node whose subtree is a path removed; undefined on paths.
///   OldLeaves: every leaf that is a leftmost child removed; total.
///   OldPaths:  every leftmost child whose subtree is a path removed; total.
/// Returns nullopt when the reduction is not defined for the input.
std::optional<PlaneTree> reduce_once(const PlaneTree& tree, ReductionMode mode);

struct ReductionOutcome {
    bool survived = true;
    int rounds_applied = 0;
    int final_size = 0;  // 0 when not survived
    std::vector<TreeMetrics> per_round;  // metrics of the j-fold reduction, j = 0..rounds_applied
    PlaneTree final_tree;  // last living tree (the input when rounds_applied = 0)
};

/// Apply reduce_once up to `rounds` times; a NotReducible state with rounds
/// remaining yields survived = false and final_size = 0.
ReductionOutcome reduce_iter(const PlaneTree& tree, ReductionMode mode, int rounds);

/// Total number of paths needed to build the tree: leaf counts summed over
/// all Paths-reduction stages, the final irreducible path contributing its
/// single leaf.
long long total_paths(const PlaneTree& tree);

/// Total number of old-path segments: old-leaf counts summed over all
/// OldPaths-reduction stages until the single-node fixpoint.
long long total_old_path_segments(const PlaneTree& tree);

}  // namespace treelab
