#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bzq {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Unrooted trivalent tree with leaves labeled 1..n and trinodes n+1..2n-2.
/// Each trinode carries a cyclic order of its three neighbors (rotation).
class Tree {
public:
    Tree(int n, std::vector<std::array<int, 3>> trinode_neighbors);

    int leaf_count() const { return n_; }
    int trinode_count() const { return n_ - 2; }
    int first_trinode() const { return n_ + 1; }
    int last_trinode() const { return 2 * n_ - 2; }
    bool is_leaf(int v) const { return v >= 1 && v <= n_; }
    bool is_trinode(int v) const { return v > n_ && v <= last_trinode(); }

    const std::vector<int>& neighbors(int v) const;
    /// Cyclic neighbor order at a trinode, as parsed/constructed.
    const std::array<int, 3>& rotation(int t) const;

    std::vector<Edge> edges() const;          // sorted
    std::vector<Edge> internal_edges() const; // both ends trinodes, sorted
    int leaf_neighbor(int leaf) const;        // the trinode a leaf hangs off

    /// Vertices on the unique path from a to b, inclusive.
    std::vector<int> path(int a, int b) const;

    /// Smallest leaf label reachable from `from` through neighbor `to`.
    int min_leaf_through(int from, int to) const;

    bool operator==(const Tree& o) const;  // labeled structure + cyclic rotations

private:
    int n_;
    std::vector<std::vector<int>> adj_;            // 1-based, size 2n-1
    std::vector<std::array<int, 3>> rotation_;     // index t - (n+1)
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse the nested multiset format: "(A,B,C)" with leaves as integers and
/// nested pairs "(X,Y)" as trinodes; "((1,2),(3,4))" joins two subtrees by
/// an edge. Errors distinguish malformed syntax, wrong degrees, duplicate
/// labels, and labels not forming 1..n.
Tree parse_tree(const std::string& text);

/// Canonical text form; parse_tree(render(t)) == t.
std::string render(const Tree& t);

/// Caterpillar: trinodes t_1..t_{n-2} in a path, t_1 adjacent to leaves 1,2,
/// t_i to leaf i+1, t_{n-2} to leaves n-1 and n.
Tree caterpillar(int n);

/// All labeled trivalent trees with n leaves ((2n-5)!! of them), by
/// iterated leaf insertion; deterministic order.
std::vector<Tree> enumerate_trees(int n);

/// Minimal connected subgraph spanning a leaf set of size >= 2.
struct ProperSubtree {
    std::uint32_t leaf_mask = 0;        // bit i-1 = leaf i
    std::vector<int> leaves;            // sorted
    std::vector<char> in_span;          // per vertex id
    std::vector<int> span_degree;       // per vertex id, 0 if outside
    std::vector<Edge> span_edges;       // sorted
};

ProperSubtree span_of(const Tree& t, const std::vector<int>& leaves);

/// All proper subtrees, ordered by increasing leaf-mask value
/// ({1,2} < {1,3} < {2,3} < {1,2,3} < ...).
std::vector<ProperSubtree> proper_subtrees(const Tree& t);

/// Number of span-trivalent vertices on the unique l1-l2 path. A vertex
/// trivalent in the ambient tree but of degree 2 in the span does not count.
int path_trinode_count(const Tree& t, const ProperSubtree& s, int l1, int l2);

/// True iff path_trinode_count is odd for every leaf pair of s.
bool is_odd_subtree(const Tree& t, const ProperSubtree& s);

}  // namespace bzq
