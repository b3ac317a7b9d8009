#include "bzq/quilt.hpp"

#include <algorithm>
#include <stdexcept>

namespace bzq {

Quilt::Quilt(Tree tree, int m) : tree_(std::move(tree)), m_(m), dia_(m) {
    // Side assignment: side 1 faces the edge toward the lowest reachable
    // leaf, sides 2 and 3 follow the trinode's rotation.
    for (int t = tree_.first_trinode(); t <= tree_.last_trinode(); ++t) {
        const auto& rot = tree_.rotation(t);
        int best = 0;
        int best_leaf = tree_.leaf_count() + 1;
        for (int k = 0; k < 3; ++k) {
            int ml = tree_.min_leaf_through(t, rot[static_cast<size_t>(k)]);
            if (ml < best_leaf) {
                best_leaf = ml;
                best = k;
            }
        }
        std::array<Edge, 3> assignment;
        for (int s = 0; s < 3; ++s)
            assignment[static_cast<size_t>(s)] =
                make_edge(t, rot[static_cast<size_t>((best + s) % 3)]);
        side_edges_[t] = assignment;
    }

    // Per-trinode constraints, shifted into quilt coordinates.
    auto shift = [&](const LinearEq& eq, int trinode) {
        LinearEq out;
        out.rhs = eq.rhs;
        for (const auto& [v, c] : eq.terms) out.terms.emplace_back(var_index(trinode, v), c);
        return out;
    };
    for (int t = tree_.first_trinode(); t <= tree_.last_trinode(); ++t) {
        for (const auto& eq : dia_.hexagon_constraints()) constraints_.push_back(shift(eq, t));
        for (const auto& eq : dia_.matching_constraints()) constraints_.push_back(shift(eq, t));
    }

    // Gluing: the lower trinode id carries the unprimed reading.
    for (const auto& e : tree_.internal_edges()) {
        auto a = side_vars(e.first, side_of(e.first, e));
        auto b = side_vars(e.second, side_of(e.second, e));
        for (int i = 1; i <= m_ - 1; ++i) {
            LinearEq eq;
            eq.terms = {{a[static_cast<size_t>(2 * i - 2)], 1},
                        {a[static_cast<size_t>(2 * i - 1)], 1},
                        {b[static_cast<size_t>(2 * (m_ - i) - 2)], -1},
                        {b[static_cast<size_t>(2 * (m_ - i) - 1)], -1}};
            constraints_.push_back(std::move(eq));
        }
    }

    Point grading(static_cast<size_t>(num_vars()), 0);
    for (int leaf = 1; leaf <= tree_.leaf_count(); ++leaf)
        for (int v : leaf_vars(leaf)) ++grading[static_cast<size_t>(v)];
    cone_ = IntegerCone(num_vars(), constraints_, std::move(grading));
}

int Quilt::side_of(int trinode, const Edge& e) const {
    const auto& assignment = side_edges_.at(trinode);
    for (int s = 0; s < 3; ++s)
        if (assignment[static_cast<size_t>(s)] == e) return s + 1;
    throw std::invalid_argument("edge not incident to trinode");
}

Edge Quilt::edge_of(int trinode, int side) const {
    return side_edges_.at(trinode)[static_cast<size_t>(side - 1)];
}

std::vector<int> Quilt::side_vars(int trinode, int side) const {
    std::vector<int> out;
    for (int v : dia_.side(side)) out.push_back(var_index(trinode, v));
    return out;
}

std::vector<int> Quilt::leaf_vars(int leaf) const {
    const int t = tree_.leaf_neighbor(leaf);
    return side_vars(t, side_of(t, make_edge(leaf, t)));
}

std::vector<LinearEq> Quilt::boundary_rows() const {
    std::vector<LinearEq> rows;
    for (int leaf = 1; leaf <= tree_.leaf_count(); ++leaf) {
        auto vars = leaf_vars(leaf);
        for (int i = 0; i < m_ - 1; ++i) {
            LinearEq eq;
            eq.terms = {{vars[static_cast<size_t>(2 * i)], 1},
                        {vars[static_cast<size_t>(2 * i + 1)], 1}};
            rows.push_back(std::move(eq));
        }
    }
    return rows;
}

Point Quilt::boundary_target(const WeightVector& lambdas) const {
    if (static_cast<int>(lambdas.size()) != tree_.leaf_count())
        throw std::invalid_argument("weight vector size must equal the leaf count");
    if (lambdas.rank() != m_ - 1) throw std::invalid_argument("weight rank must be m-1");
    Point target;
    for (size_t i = 0; i < lambdas.size(); ++i)
        for (Int c : lambdas[i].coeffs()) target.push_back(c);
    return target;
}

bool Quilt::is_valid(const Point& values) const { return cone_.contains(values); }

DominantWeight Quilt::leaf_weight(const Point& values, int leaf) const {
    auto vars = leaf_vars(leaf);
    std::vector<Int> coeffs(static_cast<size_t>(m_ - 1));
    for (int i = 0; i < m_ - 1; ++i)
        coeffs[static_cast<size_t>(i)] = values[static_cast<size_t>(vars[static_cast<size_t>(2 * i)])] +
                                         values[static_cast<size_t>(vars[static_cast<size_t>(2 * i + 1)])];
    return DominantWeight(std::move(coeffs));
}

WeightVector Quilt::boundary_map(const Point& values) const {
    std::vector<DominantWeight> entries;
    for (int leaf = 1; leaf <= tree_.leaf_count(); ++leaf)
        entries.push_back(leaf_weight(values, leaf));
    return WeightVector(std::move(entries));
}

Int Quilt::omega2_functional(const Point& values) const {
    if (m_ != 3) throw std::invalid_argument("omega2_functional needs m = 3");
    Int total = 0;
    for (int leaf = 1; leaf <= tree_.leaf_count(); ++leaf)
        total += leaf_weight(values, leaf).coeff(1);
    return total;
}

std::vector<LinearEq> Quilt::omega2_zero_rows() const {
    if (m_ != 3) throw std::invalid_argument("omega2_zero_rows needs m = 3");
    std::vector<LinearEq> rows;
    for (int leaf = 1; leaf <= tree_.leaf_count(); ++leaf) {
        auto vars = leaf_vars(leaf);
        LinearEq eq;
        eq.terms = {{vars[2], 1}, {vars[3], 1}};
        rows.push_back(std::move(eq));
    }
    return rows;
}

std::pair<DominantWeight, DominantWeight> Quilt::glue_duality_check(const Point& values,
                                                                    const Edge& e) const {
    if (!tree_.is_trinode(e.first) || !tree_.is_trinode(e.second))
        throw std::invalid_argument("not an internal edge");
    auto read = [&](int t) {
        auto vars = side_vars(t, side_of(t, e));
        std::vector<Int> coeffs(static_cast<size_t>(m_ - 1));
        for (int i = 0; i < m_ - 1; ++i)
            coeffs[static_cast<size_t>(i)] =
                values[static_cast<size_t>(vars[static_cast<size_t>(2 * i)])] +
                values[static_cast<size_t>(vars[static_cast<size_t>(2 * i + 1)])];
        return DominantWeight(std::move(coeffs));
    };
    return {read(e.first), read(e.second)};
}

std::vector<Int> Quilt::restrict_to_trinode(const Point& values, int trinode) const {
    std::vector<Int> out(static_cast<size_t>(dia_.vertex_count()));
    for (int v = 0; v < dia_.vertex_count(); ++v)
        out[static_cast<size_t>(v)] = values[static_cast<size_t>(var_index(trinode, v))];
    return out;
}

Point Quilt::restrict_to_subtree(const Point& values, const ProperSubtree& s) const {
    Point out(values.size(), 0);
    for (int t = tree_.first_trinode(); t <= tree_.last_trinode(); ++t) {
        if (!s.in_span[static_cast<size_t>(t)]) continue;
        for (int v = 0; v < dia_.vertex_count(); ++v) {
            const size_t idx = static_cast<size_t>(var_index(t, v));
            out[idx] = values[idx];
        }
    }
    return out;
}

std::vector<Edge> Quilt::support(const Point& values) const {
    std::vector<Edge> out;
    for (const auto& e : tree_.edges()) {
        const int t = tree_.is_trinode(e.first) ? e.first : e.second;
        auto vars = side_vars(t, side_of(t, e));
        bool nonzero = false;
        for (int v : vars) nonzero = nonzero || values[static_cast<size_t>(v)] != 0;
        if (nonzero) out.push_back(e);
    }
    return out;
}

Quilt build_quilt(const Tree& t, int m) { return Quilt(t, m); }

}  // namespace bzq
