#pragma once

#include "treelab/reduction.hpp"
#include "treelab/series.hpp"

namespace treelab {

/// Statistic of the r-fold reduced tree tracked by a table row / distribution.
///   Size         all modes
///   InnerI       Leaves, Paths   (inner nodes remaining)
///   LeavesL      Leaves, Paths   (leaves remaining)
///   OldLeafCount OldPaths        (old leaves remaining)
///   NeitherCount OldPaths        (nodes neither old leaves nor parents thereof)
enum class Variant { Size, InnerI, LeavesL, OldLeafCount, NeitherCount };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);
bool variant_supported(ReductionMode mode, Variant v);

/// Row polynomial in v: coefficient j counts the size-n trees whose statistic
/// after r rounds equals j. Nonnegative by construction.
using SizePoly = std::vector<Integer>;

struct GfTable {
    ReductionMode mode;
    Variant variant;
    int rounds = 0;
    int max_n = 0;
    std::vector<SizePoly> rows;     // index n = 1..max_n
    std::vector<Integer> vanished;  // a_{n,r}: trees dead after r rounds (Leaves/Paths only)

    Integer row_sum(int n) const;
    /// d-th derivative of the row polynomial at v = 1 (sum of falling factorials).
    Integer row_derivative_at_one(int n, int d) const;
    std::string to_csv() const;
    std::string to_json() const;
};

/// Exact coefficient table of [z^n] G_r(z, v) for n = 1..N.
///   Leaves:    monomial kernel z^{i+k(r+1)} F_{r+1}(-z)^{2i-1} / F_{r+2}(-z)^{2i+2k-1}
///              summed over Narayana-counted (inner, leaf) profiles.
///   Paths:     the Leaves kernel with r -> 2^{r+1} - 2.
///   OldLeaves: L(z B_r(z) v, z (B_{r+1}(z) - B_r(z)) v^2) via the explicit
///              expansion of L.
///   OldPaths:  L(f_r v_I, g_r v_L^2) with f_r = z F_{r+1}(-z)/F_{r+2}(-z),
///              g_r = z^{r+2}/F_{r+2}(-z)^2.
GfTable gf_table(ReductionMode mode, Variant variant, int r, int N);

/// Number of leaf-reduction survivors killed at exactly (n, r) per the
/// bounded-height generating function z F_r(-z)/F_{r+1}(-z).
std::vector<Integer> leaves_nonsurvivor_counts(int r, int N);

}  // namespace treelab
