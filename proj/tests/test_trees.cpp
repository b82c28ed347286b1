#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncmoments/rational.hpp"
#include "ncmoments/trees.hpp"

using namespace ncmoments;

namespace {

// The five shapes on four vertices, in preorder numbering.
const OrderedTree kPath{{{1}, {2}, {3}, {}}};
const OrderedTree kRootMidTwoLeaves{{{1}, {2, 3}, {}, {}}};
const OrderedTree kFirstChildHasChild{{{1, 3}, {2}, {}, {}}};
const OrderedTree kSecondChildHasChild{{{1, 2}, {}, {3}, {}}};
const OrderedTree kStar{{{1, 2, 3}, {}, {}, {}}};

LabeledOrderedTree labeled(const OrderedTree& shape, std::vector<int> labels) {
    return {shape, std::move(labels)};
}

LabeledOrderedTree reversed_labels(const LabeledOrderedTree& t) {
    LabeledOrderedTree out = t;
    const int v = t.shape.vertex_count();
    for (int& label : out.labels) {
        label = v + 1 - label;
    }
    return out;
}

}  // namespace

TEST_CASE("ordered tree counts are Catalan numbers") {
    for (int v = 1; v <= 8; ++v) {
        CHECK(BigInt(enumerate_ordered_trees(v).size()) == catalan(v - 1));
    }
    CHECK_THROWS_AS(enumerate_ordered_trees(0), InvalidArgument);
    CHECK_THROWS_AS(enumerate_ordered_trees(11), LimitExceeded);
}

TEST_CASE("bijection fixtures on four vertices") {
    CHECK(tree_to_partition(kPath).to_string() == "[[1,6],[2,5],[3,4]]");
    CHECK(tree_to_partition(kStar).to_string() == "[[1,2],[3,4],[5,6]]");
    CHECK(tree_to_partition(kFirstChildHasChild).to_string() == "[[1,4],[2,3],[5,6]]");
    CHECK(tree_to_partition(kSecondChildHasChild).to_string() == "[[1,2],[3,6],[4,5]]");
    CHECK(tree_to_partition(kRootMidTwoLeaves).to_string() == "[[1,6],[2,3],[4,5]]");

    CHECK(partition_to_tree(PairPartition(6, {{1, 4}, {2, 3}, {5, 6}})) ==
          kFirstChildHasChild);
    // A single vertex maps to the empty pairing and back.
    CHECK(tree_to_partition(OrderedTree{{{}}}).ground_size() == 0);
    CHECK(partition_to_tree(PairPartition()) == OrderedTree{{{}}});
}

TEST_CASE("round trips both ways") {
    for (int v = 1; v <= 8; ++v) {
        for (const OrderedTree& t : enumerate_ordered_trees(v)) {
            CHECK(partition_to_tree(tree_to_partition(t)) == t);
        }
        for (const PairPartition& p : enumerate_nc2(2 * (v - 1))) {
            CHECK(tree_to_partition(partition_to_tree(p)) == p);
        }
    }
}

TEST_CASE("malformed trees are rejected") {
    CHECK_THROWS_AS(tree_to_partition(OrderedTree{{}}), InvalidArgument);
    CHECK_THROWS_AS(tree_to_partition(OrderedTree{{{2}, {}, {1}}}), InvalidArgument);
    CHECK_THROWS_AS(tree_to_partition(OrderedTree{{{1}, {1}}}), InvalidArgument);
    CHECK_THROWS_AS(is_alternating(labeled(kPath, {1, 2, 3}), AlternationType::TypeI),
                    LengthMismatch);
}

TEST_CASE("labeled tree counts") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(count_labeled_ordered_trees(n) == factorial(2 * n) / factorial(n));
        CHECK(count_labeled_ordered_trees(n) ==
              BigInt(enumerate_ordered_trees(n + 1).size()) * factorial(n + 1));
    }
    CHECK(count_labeled_ordered_trees(3) == 120);
    CHECK(count_labeled_ordered_trees(6) == 665280);
}

TEST_CASE("alternation is a local parity rule") {
    // Descend-first: root above its children, grandchildren above their
    // parents again, and so on.
    CHECK(is_alternating(labeled(kPath, {4, 2, 3, 1}), AlternationType::TypeI));
    CHECK(is_alternating(labeled(kPath, {1, 3, 2, 4}), AlternationType::TypeII));
    CHECK_FALSE(is_alternating(labeled(kPath, {1, 3, 2, 4}), AlternationType::TypeI));
    CHECK_FALSE(is_alternating(labeled(kPath, {4, 3, 2, 1}), AlternationType::TypeI));
    // Two vertices: TypeI has the root on top.
    CHECK(is_alternating(labeled(OrderedTree{{{1}, {}}}, {2, 1}), AlternationType::TypeI));
    CHECK(is_alternating(labeled(OrderedTree{{{1}, {}}}, {1, 2}), AlternationType::TypeII));
}

TEST_CASE("alternating tree counts are n^n") {
    for (int n = 1; n <= 5; ++n) {
        const auto type1 = enumerate_alternating(n, AlternationType::TypeI);
        const auto type2 = enumerate_alternating(n, AlternationType::TypeII);
        CHECK(BigInt(type1.size()) == ipow(BigInt(n), n));
        CHECK(BigInt(type2.size()) == ipow(BigInt(n), n));
        // Reversing labels is a bijection between the two types.
        std::set<LabeledOrderedTree> reversed;
        for (const LabeledOrderedTree& t : type1) {
            reversed.insert(reversed_labels(t));
        }
        CHECK(reversed == std::set<LabeledOrderedTree>(type2.begin(), type2.end()));
    }
    CHECK(enumerate_alternating(0, AlternationType::TypeI).size() == 1);
}

TEST_CASE("the 27 rise-first trees on four vertices") {
    // All alternating labelings on four vertices whose root starts below its
    // children, grouped by shape; label tuples follow preorder.
    const std::vector<std::pair<const OrderedTree*, std::vector<int>>> fixtures = {
        {&kPath, {1, 3, 2, 4}},
        {&kPath, {1, 4, 2, 3}},
        {&kPath, {2, 4, 1, 3}},
        {&kPath, {2, 3, 1, 4}},
        {&kPath, {3, 4, 1, 2}},
        {&kRootMidTwoLeaves, {1, 4, 2, 3}},
        {&kRootMidTwoLeaves, {1, 4, 3, 2}},
        {&kRootMidTwoLeaves, {2, 4, 3, 1}},
        {&kRootMidTwoLeaves, {2, 4, 1, 3}},
        {&kRootMidTwoLeaves, {3, 4, 1, 2}},
        {&kRootMidTwoLeaves, {3, 4, 2, 1}},
        {&kFirstChildHasChild, {1, 3, 2, 4}},
        {&kFirstChildHasChild, {1, 4, 2, 3}},
        {&kFirstChildHasChild, {1, 4, 3, 2}},
        {&kFirstChildHasChild, {2, 4, 1, 3}},
        {&kFirstChildHasChild, {2, 3, 1, 4}},
        {&kSecondChildHasChild, {1, 4, 3, 2}},
        {&kSecondChildHasChild, {1, 3, 4, 2}},
        {&kSecondChildHasChild, {1, 2, 4, 3}},
        {&kSecondChildHasChild, {2, 4, 3, 1}},
        {&kSecondChildHasChild, {2, 3, 4, 1}},
        {&kStar, {1, 4, 3, 2}},
        {&kStar, {1, 3, 4, 2}},
        {&kStar, {1, 4, 2, 3}},
        {&kStar, {1, 3, 2, 4}},
        {&kStar, {1, 2, 4, 3}},
        {&kStar, {1, 2, 3, 4}},
    };
    std::set<LabeledOrderedTree> rise_first;
    std::set<LabeledOrderedTree> descend_first;
    for (const auto& [shape, labels] : fixtures) {
        const LabeledOrderedTree t = labeled(*shape, labels);
        CHECK(is_alternating(t, AlternationType::TypeII));
        rise_first.insert(t);
        descend_first.insert(reversed_labels(t));
    }
    REQUIRE(rise_first.size() == 27);

    const auto type2 = enumerate_alternating(3, AlternationType::TypeII);
    CHECK(std::set<LabeledOrderedTree>(type2.begin(), type2.end()) == rise_first);
    const auto type1 = enumerate_alternating(3, AlternationType::TypeI);
    CHECK(std::set<LabeledOrderedTree>(type1.begin(), type1.end()) == descend_first);

    // Per-shape counts match the extension counts of the matching pairings:
    // 5 for the path, 6 for the interval pairing's star, and so on.
    auto count_for = [&](const OrderedTree& shape) {
        return std::count_if(type1.begin(), type1.end(),
                             [&](const LabeledOrderedTree& t) { return t.shape == shape; });
    };
    CHECK(count_for(kPath) == 5);
    CHECK(count_for(kRootMidTwoLeaves) == 6);
    CHECK(count_for(kFirstChildHasChild) == 5);
    CHECK(count_for(kSecondChildHasChild) == 5);
    CHECK(count_for(kStar) == 6);
}
