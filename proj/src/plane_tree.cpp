#include "treelab/plane_tree.hpp"

namespace treelab {

PlaneTree parse_tree(std::string_view text) {
    if (text.empty()) throw TreeParseError("empty input", 0);
    std::vector<std::vector<PlaneTree>> stack;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') {
            stack.emplace_back();
        } else if (ch == ')') {
            if (stack.empty()) throw TreeParseError("unmatched ')'", i);
            PlaneTree node{std::move(stack.back())};
            stack.pop_back();
            if (stack.empty()) {
                if (i + 1 != text.size()) throw TreeParseError("trailing characters", i + 1);
                return node;
            }
            stack.back().push_back(std::move(node));
        } else {
            throw TreeParseError("unexpected character", i);
        }
    }
    throw TreeParseError("unbalanced input, missing ')'", text.size());
}

static void serialize_rec(const PlaneTree& t, std::string& out) {
    out.push_back('(');
    for (const auto& c : t.children) serialize_rec(c, out);
    out.push_back(')');
}

std::string serialize_tree(const PlaneTree& tree) {
    std::string out;
    serialize_rec(tree, out);
    return out;
}

namespace {

void metrics_rec(const PlaneTree& t, bool is_first_child, TreeMetrics& m, int depth) {
    m.size += 1;
    if (depth > m.node_height) m.node_height = depth;
    if (t.children.empty()) {
        m.leaf_count += 1;
        if (is_first_child) m.old_leaf_count += 1;
        return;
    }
    if (t.children.size() > 1) m.is_path = false;
    for (size_t i = 0; i < t.children.size(); ++i)
        metrics_rec(t.children[i], i == 0, m, depth + 1);
}

}  // namespace

TreeMetrics tree_metrics(const PlaneTree& tree) {
    TreeMetrics m;
    m.is_path = true;
    metrics_rec(tree, false, m, 1);
    m.inner_count = m.size - m.leaf_count;
    return m;
}

int tree_size(const PlaneTree& tree) {
    int n = 1;
    for (const auto& c : tree.children) n += tree_size(c);
    return n;
}

}  // namespace treelab
