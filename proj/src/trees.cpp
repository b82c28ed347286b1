#include "ncmoments/trees.hpp"

#include <algorithm>
#include <numeric>

namespace ncmoments {

namespace {

/// Recursive tree value used during enumeration; converted to the flat
/// preorder representation once assembled.
struct TreeNode {
    std::vector<TreeNode> kids;
};

std::vector<std::vector<TreeNode>> enumerate_forests(int vertices);

/// All ordered trees on v >= 1 vertices: a root above each forest on v-1.
std::vector<TreeNode> enumerate_nodes(int v) {
    std::vector<TreeNode> out;
    for (auto& forest : enumerate_forests(v - 1)) {
        out.push_back(TreeNode{std::move(forest)});
    }
    return out;
}

/// All ordered forests (sequences of ordered trees) with the given total
/// vertex count, by size of the first tree, then first tree, then rest.
std::vector<std::vector<TreeNode>> enumerate_forests(int vertices) {
    if (vertices == 0) {
        return {{}};
    }
    std::vector<std::vector<TreeNode>> out;
    for (int first = 1; first <= vertices; ++first) {
        const auto heads = enumerate_nodes(first);
        const auto tails = enumerate_forests(vertices - first);
        for (const auto& head : heads) {
            for (const auto& tail : tails) {
                std::vector<TreeNode> forest;
                forest.reserve(1 + tail.size());
                forest.push_back(head);
                forest.insert(forest.end(), tail.begin(), tail.end());
                out.push_back(std::move(forest));
            }
        }
    }
    return out;
}

int flatten(const TreeNode& node, OrderedTree& out) {
    const int id = static_cast<int>(out.children.size());
    out.children.emplace_back();
    for (const TreeNode& kid : node.kids) {
        // Recurse before indexing: the recursive call grows out.children and
        // may reallocate it.
        const int child = flatten(kid, out);
        out.children[static_cast<size_t>(id)].push_back(child);
    }
    return id;
}

void check_preorder(const OrderedTree& t) {
    const int v = t.vertex_count();
    if (v < 1) {
        throw InvalidArgument("OrderedTree: need at least the root vertex");
    }
    // Every non-root vertex must appear exactly once as a child.
    std::vector<bool> seen(static_cast<size_t>(v), false);
    for (int u = 0; u < v; ++u) {
        for (int c : t.children[static_cast<size_t>(u)]) {
            if (c < 1 || c >= v || seen[static_cast<size_t>(c)]) {
                throw InvalidArgument("OrderedTree: malformed child list");
            }
            seen[static_cast<size_t>(c)] = true;
        }
    }
    // A depth-first walk from the root must visit 0, 1, ..., v-1 in order.
    int next = 0;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u != next++) {
            throw InvalidArgument("OrderedTree: vertices not numbered in preorder");
        }
        const auto& kids = t.children[static_cast<size_t>(u)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    if (next != v) {
        throw InvalidArgument("OrderedTree: disconnected vertices");
    }
}

}  // namespace

std::vector<OrderedTree> enumerate_ordered_trees(int v, int max_vertices) {
    if (v < 1) {
        throw InvalidArgument("enumerate_ordered_trees: need at least one vertex");
    }
    if (v > max_vertices) {
        throw LimitExceeded("enumerate_ordered_trees: " + std::to_string(v) +
                            " vertices exceeds limit " + std::to_string(max_vertices));
    }
    std::vector<OrderedTree> out;
    for (const TreeNode& node : enumerate_nodes(v)) {
        OrderedTree t;
        flatten(node, t);
        out.push_back(std::move(t));
    }
    return out;
}

PairPartition tree_to_partition(const OrderedTree& t) {
    check_preorder(t);
    const int v = t.vertex_count();
    std::vector<std::pair<int, int>> blocks(static_cast<size_t>(v) - 1);
    int pos = 0;
    // The root contributes no block; each non-root vertex opens at its first
    // visit and closes after its subtree, giving nested intervals.
    auto walk = [&](auto&& self, int u) -> void {
        if (u != 0) {
            blocks[static_cast<size_t>(u) - 1].first = ++pos;
        }
        for (int c : t.children[static_cast<size_t>(u)]) {
            self(self, c);
        }
        if (u != 0) {
            blocks[static_cast<size_t>(u) - 1].second = ++pos;
        }
    };
    walk(walk, 0);
    return PairPartition(2 * (v - 1), std::move(blocks));
}

OrderedTree partition_to_tree(const PairPartition& p) {
    OrderedTree t;
    t.children.resize(static_cast<size_t>(p.size()) + 1);
    // Blocks sorted by left leg are already in preorder of the nesting
    // forest, so block k maps straight to vertex k (imaginary block = root 0)
    // and child lists come out in left-to-right order.
    for (int k = 1; k <= p.size(); ++k) {
        t.children[static_cast<size_t>(p.nearest_outer(k))].push_back(k);
    }
    return t;
}

bool is_alternating(const LabeledOrderedTree& t, AlternationType type) {
    const int v = t.shape.vertex_count();
    if (static_cast<int>(t.labels.size()) != v) {
        throw LengthMismatch("is_alternating: " + std::to_string(t.labels.size()) +
                             " labels for " + std::to_string(v) + " vertices");
    }
    // Walk with explicit depth; for TypeI an edge leaving even depth must
    // descend (parent label > child label) and an edge leaving odd depth must
    // rise; TypeII is the mirror image.
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    while (!stack.empty()) {
        const auto [u, depth] = stack.back();
        stack.pop_back();
        const bool parent_above = (depth % 2 == 0) == (type == AlternationType::TypeI);
        for (int c : t.shape.children[static_cast<size_t>(u)]) {
            const int pu = t.labels[static_cast<size_t>(u)];
            const int pc = t.labels[static_cast<size_t>(c)];
            if (parent_above ? !(pu > pc) : !(pu < pc)) {
                return false;
            }
            stack.emplace_back(c, depth + 1);
        }
    }
    return true;
}

std::vector<LabeledOrderedTree> enumerate_alternating(int n, AlternationType type,
                                                      int max_vertices) {
    if (n < 0) {
        throw InvalidArgument("enumerate_alternating: negative size");
    }
    std::vector<LabeledOrderedTree> out;
    for (const OrderedTree& shape : enumerate_ordered_trees(n + 1, max_vertices)) {
        std::vector<int> labels(static_cast<size_t>(n) + 1);
        std::iota(labels.begin(), labels.end(), 1);
        do {
            LabeledOrderedTree t{shape, labels};
            if (is_alternating(t, type)) {
                out.push_back(std::move(t));
            }
        } while (std::next_permutation(labels.begin(), labels.end()));
    }
    return out;
}

BigInt count_labeled_ordered_trees(int n) {
    if (n < 0) {
        throw InvalidArgument("count_labeled_ordered_trees: negative size");
    }
    return factorial(2 * n) / factorial(n);
}

}  // namespace ncmoments
