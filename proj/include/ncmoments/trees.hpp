#pragma once

#include <compare>
#include <vector>

#include "ncmoments/partition.hpp"
#include "ncmoments/rational.hpp"

namespace ncmoments {

/// Default cap on the vertex count for tree enumeration (C_9 = 4862 shapes
/// at 10 vertices, times up to 10! labelings in labeled enumerations).
inline constexpr int kDefaultMaxVertices = 10;

/// An ordered rooted tree.  Vertices are numbered 0..v-1 in preorder (root
/// first, then each child subtree left to right), so the root is always 0
/// and `children[u]` lists u's children in their left-to-right order.
///
/// Under the standard bijection with noncrossing pair partitions the root
/// plays the role of the imaginary block and vertex k of the k-th block in
/// left-leg order, which is exactly preorder.
struct OrderedTree {
    std::vector<std::vector<int>> children;

    int vertex_count() const { return static_cast<int>(children.size()); }

    friend auto operator<=>(const OrderedTree&, const OrderedTree&) = default;
};

/// An ordered rooted tree whose vertices carry the labels 1..v, each once;
/// labels[u] is the label of vertex u.
struct LabeledOrderedTree {
    OrderedTree shape;
    std::vector<int> labels;

    friend auto operator<=>(const LabeledOrderedTree&, const LabeledOrderedTree&) = default;
};

/// The two alternation patterns for labeled trees.  TypeI trees descend
/// first: along every root-to-leaf path the labels alternate starting with a
/// descent (root > child for edges leaving even depth, child > parent for
/// edges leaving odd depth).  TypeII trees rise first.  Reversing all labels
/// (label i -> v+1-i) exchanges the two types.
enum class AlternationType { TypeI, TypeII };

/// All ordered rooted trees on v vertices (v >= 1), in canonical order.
/// There are C_{v-1} of them.
std::vector<OrderedTree> enumerate_ordered_trees(int v,
                                                 int max_vertices = kDefaultMaxVertices);

/// The noncrossing pair partition of {1, ..., 2(v-1)} corresponding to a
/// tree: each non-root vertex becomes a block, nested inside its parent's
/// block (the root is the imaginary block), siblings left to right.
PairPartition tree_to_partition(const OrderedTree& t);

/// Inverse of tree_to_partition: the nesting forest of the pairing, with the
/// imaginary block as root and children ordered by left leg.
OrderedTree partition_to_tree(const PairPartition& p);

/// Whether every edge of the labeled tree follows the given alternation
/// pattern.
bool is_alternating(const LabeledOrderedTree& t, AlternationType type);

/// All alternating labeled trees on n+1 vertices of the given type, ordered
/// by shape (canonical order) and then by label sequence.  There are n^n of
/// each type.
std::vector<LabeledOrderedTree> enumerate_alternating(int n, AlternationType type,
                                                      int max_vertices = kDefaultMaxVertices);

/// Number of labeled ordered rooted trees on n+1 vertices: (2n)!/n!
/// (C_n shapes times (n+1)! labelings).
BigInt count_labeled_ordered_trees(int n);

}  // namespace ncmoments
