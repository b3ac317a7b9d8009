#pragma once

#include <array>
#include <string>
#include <vector>

#include "bzq/cone.hpp"
#include "bzq/weights.hpp"

namespace bzq {

/// Triangular sl_m diagram: (m-2)(m-1)/2 pairwise disjoint hexagons arranged
/// in rows (row r holds r of them) plus 3 corner vertices. Side readings run
/// counter-clockwise, sides numbered 1,2,3 starting from the bottom.
///
/// Hexagon vertices are indexed 0..5 clockwise from top-left:
/// 0=TL, 1=TR, 2=R, 3=BR, 4=BL, 5=L. Facing vertices of adjacent hexagons
/// are distinct diagram vertices joined by an interior edge; a weighting must
/// give the two ends equal values (they depict one honeycomb edge).
class BZDiagram {
public:
    explicit BZDiagram(int m);

    int m() const { return m_; }
    int vertex_count() const { return vertex_count_; }
    int hexagon_count() const { return static_cast<int>(hexagons_.size()); }

    const std::vector<std::array<int, 6>>& hexagons() const { return hexagons_; }
    const std::array<int, 3>& corners() const { return corners_; }
    /// Vertex indices of side s (1..3) in counter-clockwise reading order.
    const std::vector<int>& side(int s) const;
    const std::vector<std::pair<int, int>>& interior_pairs() const { return interior_pairs_; }

    const std::string& vertex_name(int v) const { return names_[static_cast<size_t>(v)]; }
    int vertex_by_name(const std::string& name) const;

    /// The three opposite-side equations per hexagon, x_A + x_B - x_E - x_D = 0.
    std::vector<LinearEq> hexagon_constraints() const;
    /// Equality constraints for interior facing pairs.
    std::vector<LinearEq> matching_constraints() const;

    /// Cone of valid weightings, graded by total boundary degree.
    IntegerCone cone() const;

    DominantWeight boundary_weight(const std::vector<Int>& values, int s) const;
    bool is_valid_weighting(const std::vector<Int>& values) const;

private:
    int m_;
    int vertex_count_;
    std::vector<std::array<int, 6>> hexagons_;  // row-major (r,c), positions 0..5
    std::array<int, 3> corners_{};
    std::array<std::vector<int>, 3> sides_;
    std::vector<std::pair<int, int>> interior_pairs_;
    std::vector<std::string> names_;
};

/// Build the diagram for sl_m (m >= 2; m=2 has corners only).
BZDiagram build_diagram(int m);

}  // namespace bzq
