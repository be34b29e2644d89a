#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "treelab/plane_tree.hpp"

namespace treelab {

/// Deterministic PRNG; identical seeds give identical streams on every
/// platform (the engine is fully specified and the bounded draw below avoids
/// the implementation-defined standard distributions).
class RandomState {
public:
    explicit RandomState(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    /// Unbiased draw from {0, ..., bound-1} by masked rejection.
    uint64_t uniform_below(uint64_t bound);

private:
    std::mt19937_64 eng_;
};

/// Uniform random plane tree with n nodes: shuffle n rises and n-1 falls,
/// rotate to the unique cyclic shift with all prefix sums positive, drop the
/// leading rise, decode the Dyck word.
PlaneTree sample_tree(int n, RandomState& state);

/// Enumerates the C_{n-1} plane trees of size n in lexicographic order of
/// their canonical strings (Dyck-word successor algorithm).
class TreeEnumerator {
public:
    static constexpr int kDefaultCap = 15;
    explicit TreeEnumerator(int n, int cap = kDefaultCap);
    /// Next tree, or nullopt when exhausted.
    std::optional<PlaneTree> next();

private:
    bool advance();
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<int8_t> word_;  // +1 = '(' , -1 = ')'
};

/// Convenience wrapper: apply fn to every size-n tree.
template <typename Fn>
void for_each_tree(int n, Fn&& fn, int cap = TreeEnumerator::kDefaultCap) {
    TreeEnumerator en(n, cap);
    while (auto t = en.next()) fn(*t);
}

}  // namespace treelab
