#include "treelab/ensemble.hpp"

#include <bit>

namespace treelab {

uint64_t RandomState::uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    if (bound == 1) return 0;
    int bits = 64 - std::countl_zero(bound - 1);
    uint64_t mask = (bits >= 64) ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
    for (;;) {
        uint64_t v = eng_() & mask;
        if (v < bound) return v;
    }
}

namespace {

PlaneTree decode_dyck(const std::vector<int8_t>& word) {
    std::vector<PlaneTree> stack;
    stack.emplace_back();  // root
    for (int8_t s : word) {
        if (s > 0) {
            stack.emplace_back();
        } else {
            PlaneTree t = std::move(stack.back());
            stack.pop_back();
            stack.back().children.push_back(std::move(t));
        }
    }
    return std::move(stack.back());
}

}  // namespace

PlaneTree sample_tree(int n, RandomState& state) {
    if (n < 1) throw std::invalid_argument("sample_tree: size must be >= 1");
    const int m = n - 1;
    std::vector<int8_t> steps(2 * m + 1);
    for (int i = 0; i <= m; ++i) steps[i] = 1;
    for (int i = m + 1; i <= 2 * m; ++i) steps[i] = -1;
    for (int i = 2 * m; i > 0; --i) {
        int j = static_cast<int>(state.uniform_below(static_cast<uint64_t>(i) + 1));
        std::swap(steps[i], steps[j]);
    }
    // cycle lemma: start right after the last position attaining the minimal
    // prefix sum; the rotation then has all prefix sums positive
    int sum = 0, min_sum = 0, min_pos = -1;
    for (int i = 0; i < 2 * m + 1; ++i) {
        sum += steps[i];
        if (sum <= min_sum) {
            min_sum = sum;
            min_pos = i;
        }
    }
    int start = (min_pos + 1) % (2 * m + 1);
    std::vector<int8_t> word(2 * m);
    for (int i = 0; i < 2 * m; ++i) word[i] = steps[(start + 1 + i) % (2 * m + 1)];
    return decode_dyck(word);
}

TreeEnumerator::TreeEnumerator(int n, int cap) : n_(n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: size must be >= 1");
    if (n > cap)
        throw std::invalid_argument("enumerate_trees: size " + std::to_string(n) +
                                    " exceeds the enumeration cap " + std::to_string(cap));
    const int m = n - 1;
    word_.resize(2 * m);
    for (int i = 0; i < m; ++i) word_[i] = 1;
    for (int i = m; i < 2 * m; ++i) word_[i] = -1;
}

bool TreeEnumerator::advance() {
    const int m = n_ - 1;
    const int len = 2 * m;
    // rightmost '(' that can become ')': prefix depth stays >= 0 and a close
    // is still available
    int opens = m, closes = m;
    for (int i = len - 1; i >= 0; --i) {
        if (word_[i] > 0) --opens; else --closes;
        if (word_[i] > 0 && opens - closes >= 1 && closes + 1 <= m) {
            word_[i] = -1;
            int fill_opens = m - opens;
            for (int k = i + 1; k < len; ++k) word_[k] = (fill_opens-- > 0) ? 1 : -1;
            return true;
        }
    }
    return false;
}

std::optional<PlaneTree> TreeEnumerator::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return decode_dyck(word_);
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return decode_dyck(word_);
}

}  // namespace treelab
