#include "bzq/bz_diagram.hpp"

#include <stdexcept>

namespace bzq {

namespace {

// Hexagon vertex positions, clockwise from top-left.
constexpr int TL = 0, TR = 1, R = 2, BR = 3, BL = 4, L = 5;

}  // namespace

BZDiagram::BZDiagram(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("BZ diagram needs m >= 2");
    const int rows = m - 2;
    auto hex_index = [&](int r, int c) { return (r - 1) * r / 2 + (c - 1); };

    corners_ = {0, 1, 2};  // C_L, C_R, C_T
    names_ = {"c1", "c2", "c3"};
    int next = 3;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= r; ++c) {
            std::array<int, 6> hex{};
            for (int p = 0; p < 6; ++p) {
                hex[static_cast<size_t>(p)] = next++;
                names_.push_back("h" + std::to_string(r) + "." + std::to_string(c) + "." +
                                 std::to_string(p));
            }
            hexagons_.push_back(hex);
            (void)hex_index;
        }
    vertex_count_ = next;

    auto hex = [&](int r, int c) -> const std::array<int, 6>& {
        return hexagons_[static_cast<size_t>(hex_index(r, c))];
    };

    // Side 1 (bottom, C_L -> C_R): BL,BR of each bottom-row hexagon.
    sides_[0].push_back(corners_[0]);
    for (int c = 1; c <= rows; ++c) {
        sides_[0].push_back(hex(rows, c)[BL]);
        sides_[0].push_back(hex(rows, c)[BR]);
    }
    sides_[0].push_back(corners_[1]);
    // Side 2 (right, C_R -> C_T): R,TR of each last-column hexagon, bottom-up.
    sides_[1].push_back(corners_[1]);
    for (int r = rows; r >= 1; --r) {
        sides_[1].push_back(hex(r, r)[R]);
        sides_[1].push_back(hex(r, r)[TR]);
    }
    sides_[1].push_back(corners_[2]);
    // Side 3 (left, C_T -> C_L): TL,L of each first-column hexagon, top-down.
    sides_[2].push_back(corners_[2]);
    for (int r = 1; r <= rows; ++r) {
        sides_[2].push_back(hex(r, 1)[TL]);
        sides_[2].push_back(hex(r, 1)[L]);
    }
    sides_[2].push_back(corners_[0]);

    // Facing vertices of adjacent hexagons (one honeycomb edge each).
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= r; ++c) {
            if (c < r) interior_pairs_.push_back({hex(r, c)[R], hex(r, c + 1)[L]});
            if (r < rows) {
                interior_pairs_.push_back({hex(r, c)[BL], hex(r + 1, c)[TR]});
                interior_pairs_.push_back({hex(r, c)[BR], hex(r + 1, c + 1)[TL]});
            }
        }

    for (const auto& s : sides_)
        if (static_cast<int>(s.size()) != 2 * (m - 1))
            throw std::logic_error("side reading has the wrong length");
}

const std::vector<int>& BZDiagram::side(int s) const {
    if (s < 1 || s > 3) throw std::invalid_argument("side must be 1, 2 or 3");
    return sides_[static_cast<size_t>(s - 1)];
}

int BZDiagram::vertex_by_name(const std::string& name) const {
    for (int v = 0; v < vertex_count_; ++v)
        if (names_[static_cast<size_t>(v)] == name) return v;
    throw std::invalid_argument("unknown vertex name: " + name);
}

std::vector<LinearEq> BZDiagram::hexagon_constraints() const {
    std::vector<LinearEq> eqs;
    for (const auto& hex : hexagons_)
        for (int k = 0; k < 3; ++k) {
            // Side (k, k+1) opposite side (k+3, k+4).
            LinearEq eq;
            eq.terms = {{hex[static_cast<size_t>(k)], 1},
                        {hex[static_cast<size_t>(k + 1)], 1},
                        {hex[static_cast<size_t>((k + 3) % 6)], -1},
                        {hex[static_cast<size_t>((k + 4) % 6)], -1}};
            eqs.push_back(std::move(eq));
        }
    return eqs;
}

std::vector<LinearEq> BZDiagram::matching_constraints() const {
    std::vector<LinearEq> eqs;
    for (const auto& [a, b] : interior_pairs_) {
        LinearEq eq;
        eq.terms = {{a, 1}, {b, -1}};
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

IntegerCone BZDiagram::cone() const {
    auto eqs = hexagon_constraints();
    for (auto& eq : matching_constraints()) eqs.push_back(std::move(eq));
    Point grading(static_cast<size_t>(vertex_count_), 0);
    for (const auto& s : sides_)
        for (int v : s) ++grading[static_cast<size_t>(v)];
    return IntegerCone(vertex_count_, std::move(eqs), std::move(grading));
}

DominantWeight BZDiagram::boundary_weight(const std::vector<Int>& values, int s) const {
    const auto& reading = side(s);
    std::vector<Int> coeffs(static_cast<size_t>(m_ - 1));
    for (int i = 0; i < m_ - 1; ++i)
        coeffs[static_cast<size_t>(i)] = values[static_cast<size_t>(reading[static_cast<size_t>(2 * i)])] +
                                         values[static_cast<size_t>(reading[static_cast<size_t>(2 * i + 1)])];
    return DominantWeight(std::move(coeffs));
}

bool BZDiagram::is_valid_weighting(const std::vector<Int>& values) const {
    if (static_cast<int>(values.size()) != vertex_count_) return false;
    for (Int v : values)
        if (v < 0) return false;
    for (const auto& eq : hexagon_constraints()) {
        Int s = 0;
        for (const auto& [v, c] : eq.terms) s += c * values[static_cast<size_t>(v)];
        if (s != 0) return false;
    }
    for (const auto& [a, b] : interior_pairs_)
        if (values[static_cast<size_t>(a)] != values[static_cast<size_t>(b)]) return false;
    return true;
}

BZDiagram build_diagram(int m) { return BZDiagram(m); }

}  // namespace bzq
