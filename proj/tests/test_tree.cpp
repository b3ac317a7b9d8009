#include <doctest.h>

#include <bit>
#include <set>

#include "bzq/tree.hpp"

using namespace bzq;

TEST_CASE("parse smallest trees") {
    auto t3 = parse_tree("(1,2,3)");
    CHECK(t3.leaf_count() == 3);
    CHECK(t3.trinode_count() == 1);
    CHECK(t3.edges().size() == 3);

    auto t4 = parse_tree("((1,2),(3,4))");
    CHECK(t4.leaf_count() == 4);
    CHECK(t4.trinode_count() == 2);
    CHECK(t4.edges().size() == 5);
    CHECK(t4.internal_edges().size() == 1);
}

TEST_CASE("parse errors are specific") {
    CHECK_THROWS_WITH_AS(parse_tree("((1,2),3,4,5)"), doctest::Contains("degree 4"), ParseError);
    CHECK_THROWS_AS(parse_tree("(1,2,2)"), ParseError);        // duplicate label
    CHECK_THROWS_AS(parse_tree("(1,2,4)"), ParseError);        // labels not 1..n
    CHECK_THROWS_AS(parse_tree("(1,2"), ParseError);           // malformed
    CHECK_THROWS_AS(parse_tree("(1,2)"), ParseError);          // bare edge
    CHECK_THROWS_AS(parse_tree("((1,2,3),4)"), ParseError);    // nested triple
}

TEST_CASE("caterpillar matches parsed forms") {
    CHECK(caterpillar(3) == parse_tree("(1,2,3)"));
    CHECK(caterpillar(4) == parse_tree("((1,2),(3,4))"));
    auto c6 = caterpillar(6);
    CHECK(c6.trinode_count() == 4);
    for (int t = c6.first_trinode(); t <= c6.last_trinode(); ++t) {
        bool leaf_adjacent = false;
        for (int nb : c6.neighbors(t)) leaf_adjacent = leaf_adjacent || c6.is_leaf(nb);
        CHECK(leaf_adjacent);
    }
    CHECK_THROWS(caterpillar(2));
}

TEST_CASE("render round-trips") {
    for (int n = 3; n <= 6; ++n) CHECK(parse_tree(render(caterpillar(n))) == caterpillar(n));
    for (int n = 3; n <= 6; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(parse_tree(render(t)) == t);
}

TEST_CASE("enumerate_trees counts (2n-5)!!") {
    CHECK(enumerate_trees(3).size() == 1);
    CHECK(enumerate_trees(4).size() == 3);
    CHECK(enumerate_trees(5).size() == 15);
    CHECK(enumerate_trees(6).size() == 105);
}

TEST_CASE("proper subtree counts") {
    for (int n = 3; n <= 8; ++n) {
        auto subs = proper_subtrees(caterpillar(n));
        CHECK(subs.size() == (1u << n) - n - 1);
    }
    // Order: increasing leaf-mask value.
    auto subs = proper_subtrees(caterpillar(3));
    REQUIRE(subs.size() == 4);
    CHECK(subs[0].leaves == std::vector<int>{1, 2});
    CHECK(subs[1].leaves == std::vector<int>{1, 3});
    CHECK(subs[2].leaves == std::vector<int>{2, 3});
    CHECK(subs[3].leaves == std::vector<int>{1, 2, 3});
}

TEST_CASE("span nesting") {
    auto t = caterpillar(6);
    auto inner = span_of(t, {1, 3});
    auto outer = span_of(t, {1, 3, 6});
    for (const auto& e : inner.span_edges)
        CHECK(std::find(outer.span_edges.begin(), outer.span_edges.end(), e) !=
              outer.span_edges.end());
}

TEST_CASE("path_trinode_count counts span-trivalent vertices only") {
    auto t4 = caterpillar(4);
    CHECK(path_trinode_count(t4, span_of(t4, {1, 2, 3}), 1, 3) == 1);
    CHECK(path_trinode_count(t4, span_of(t4, {1, 2, 3, 4}), 1, 4) == 2);
    auto t6 = caterpillar(6);
    CHECK(path_trinode_count(t6, span_of(t6, {1, 3, 6}), 1, 6) == 1);
    CHECK_THROWS(path_trinode_count(t6, span_of(t6, {1, 3}), 1, 6));
}

TEST_CASE("is_odd_subtree on caterpillars selects exactly the triples") {
    for (int n = 4; n <= 8; ++n) {
        auto t = caterpillar(n);
        for (const auto& s : proper_subtrees(t))
            CHECK(is_odd_subtree(t, s) == (s.leaves.size() == 3));
    }
    auto t4 = caterpillar(4);
    CHECK_FALSE(is_odd_subtree(t4, span_of(t4, {1, 2, 3, 4})));
    CHECK_FALSE(is_odd_subtree(t4, span_of(t4, {1, 2})));
}

TEST_CASE("snowflake tree has a 6-leaf odd subtree") {
    auto t = parse_tree("((1,2),(3,4),(5,6))");
    CHECK(is_odd_subtree(t, span_of(t, {1, 2, 3, 4, 5, 6})));
}

TEST_CASE("min_leaf_through") {
    auto t = caterpillar(5);
    int t1 = t.leaf_neighbor(1);
    CHECK(t.min_leaf_through(t1, 1) == 1);
    CHECK(t.min_leaf_through(1, t1) == 2);
    int t2 = t.leaf_neighbor(3);
    CHECK(t.min_leaf_through(t2, t1) == 1);
}
