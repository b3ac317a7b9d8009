#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bzq/bz_diagram.hpp"
#include "bzq/cone.hpp"
#include "bzq/tree.hpp"
#include "bzq/weights.hpp"

namespace bzq {

/// One BZ diagram per trinode of a trivalent tree, glued along internal
/// edges by the reversal rule: opposite side readings (a_i), (A_i) satisfy
/// a_{2i-1}+a_{2i} = A_{2(m-i)-1}+A_{2(m-i)}, i.e. the two virtual boundary
/// weights across an edge are duals.
class Quilt {
public:
    Quilt(Tree tree, int m);

    const Tree& tree() const { return tree_; }
    int m() const { return m_; }
    const BZDiagram& diagram() const { return dia_; }

    int num_vars() const { return tree_.trinode_count() * dia_.vertex_count(); }
    int trinode_slot(int t) const { return t - tree_.first_trinode(); }
    int var_index(int trinode, int vertex) const {
        return trinode_slot(trinode) * dia_.vertex_count() + vertex;
    }

    /// Diagram side (1..3) assigned to an incident edge at a trinode.
    int side_of(int trinode, const Edge& e) const;
    Edge edge_of(int trinode, int side) const;

    /// Variable indices of a side reading at a trinode (ccw order).
    std::vector<int> side_vars(int trinode, int side) const;
    /// Variable indices read at a leaf's owning side.
    std::vector<int> leaf_vars(int leaf) const;

    /// Full constraint list: hexagon + interior matching per trinode, plus
    /// m-1 gluing equations per internal edge.
    const std::vector<LinearEq>& constraints() const { return constraints_; }

    /// Cone of all valid weightings, graded by total boundary degree.
    const IntegerCone& cone() const { return cone_; }

    /// Rows of the boundary map pi: m-1 rows per leaf, in leaf order.
    std::vector<LinearEq> boundary_rows() const;
    /// Target vector for a prescribed boundary (matches boundary_rows order).
    Point boundary_target(const WeightVector& lambdas) const;

    bool is_valid(const Point& values) const;

    WeightVector boundary_map(const Point& values) const;
    DominantWeight leaf_weight(const Point& values, int leaf) const;

    /// Sum over leaves of the omega_2 coefficient of the boundary (m=3 only).
    Int omega2_functional(const Point& values) const;
    /// Rows forcing every leaf's omega_2 coefficient to zero (m=3 only).
    std::vector<LinearEq> omega2_zero_rows() const;

    /// The two virtual boundary weights read from either side of an internal
    /// edge (lower-id trinode first); duals of each other on valid weightings.
    std::pair<DominantWeight, DominantWeight> glue_duality_check(const Point& values,
                                                                 const Edge& e) const;

    /// Values on one trinode's diagram.
    std::vector<Int> restrict_to_trinode(const Point& values, int trinode) const;
    /// Values kept on the span's trinodes, zero elsewhere.
    Point restrict_to_subtree(const Point& values, const ProperSubtree& s) const;

    /// Edges whose incident side readings are not identically zero.
    std::vector<Edge> support(const Point& values) const;

private:
    Tree tree_;
    int m_;
    BZDiagram dia_;
    std::map<int, std::array<Edge, 3>> side_edges_;  // trinode -> side-1..3 edges
    std::vector<LinearEq> constraints_;
    IntegerCone cone_;
};

Quilt build_quilt(const Tree& t, int m);

}  // namespace bzq
