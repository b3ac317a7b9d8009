#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "bzq/bz_diagram.hpp"

using namespace bzq;

TEST_CASE("diagram counting constraints") {
    for (int m = 2; m <= 6; ++m) {
        BZDiagram d(m);
        const int hex = (m - 2) * (m - 1) / 2;
        CHECK(d.hexagon_count() == hex);
        CHECK(d.vertex_count() == 6 * hex + 3);
        for (int s = 1; s <= 3; ++s) CHECK(d.side(s).size() == 2 * (m - 1));
        // No vertex in two hexagons; corners in none.
        std::set<int> seen;
        for (const auto& h : d.hexagons())
            for (int v : h) CHECK(seen.insert(v).second);
        for (int c : d.corners()) CHECK_FALSE(seen.contains(c));
        // Each side begins and ends with a corner; each corner is in 2 sides.
        std::map<int, int> corner_uses;
        for (int s = 1; s <= 3; ++s) {
            CHECK(std::find(d.corners().begin(), d.corners().end(), d.side(s).front()) !=
                  d.corners().end());
            CHECK(std::find(d.corners().begin(), d.corners().end(), d.side(s).back()) !=
                  d.corners().end());
            ++corner_uses[d.side(s).front()];
            ++corner_uses[d.side(s).back()];
        }
        for (int c : d.corners()) CHECK(corner_uses[c] == 2);
    }
    CHECK_THROWS(BZDiagram(1));
}

TEST_CASE("hexagon constraint counts") {
    CHECK(BZDiagram(3).hexagon_constraints().size() == 3);
    CHECK(BZDiagram(5).hexagon_constraints().size() == 18);
    CHECK(BZDiagram(2).hexagon_constraints().size() == 0);
}

TEST_CASE("m=2 degenerates to three corners") {
    BZDiagram d(2);
    CHECK(d.vertex_count() == 3);
    for (int s = 1; s <= 3; ++s) CHECK(d.side(s).size() == 2);
}

TEST_CASE("boundary weights of the zero weighting vanish") {
    BZDiagram d(3);
    std::vector<Int> zero(static_cast<size_t>(d.vertex_count()), 0);
    for (int s = 1; s <= 3; ++s) CHECK(d.boundary_weight(zero, s).is_zero());
}

TEST_CASE("sl_3 triangle Hilbert basis: exactly X, Y and the six P_ij") {
    BZDiagram d(3);
    auto hb = hilbert_basis(d.cone(), 3);
    CHECK(hb.complete);
    REQUIRE(hb.elements.size() == 8);

    std::multiset<std::array<Int, 6>> signatures;
    for (const auto& p : hb.elements) {
        std::array<Int, 6> sig{};
        for (int s = 1; s <= 3; ++s) {
            auto w = d.boundary_weight(p, s);
            sig[static_cast<size_t>(2 * (s - 1))] = w.coeff(0);
            sig[static_cast<size_t>(2 * (s - 1) + 1)] = w.coeff(1);
        }
        signatures.insert(sig);
    }
    // X, Y, and P_ij for the six ordered pairs.
    std::multiset<std::array<Int, 6>> expected{
        {1, 0, 1, 0, 1, 0},  // X
        {0, 1, 0, 1, 0, 1},  // Y
        {1, 0, 0, 1, 0, 0},  // P_12
        {0, 1, 1, 0, 0, 0},  // P_21
        {0, 0, 1, 0, 0, 1},  // P_23
        {0, 0, 0, 1, 1, 0},  // P_32
        {0, 1, 0, 0, 1, 0},  // P_31
        {1, 0, 0, 0, 0, 1},  // P_13
    };
    CHECK(signatures == expected);
}

TEST_CASE("hexagon sums are linear: sums of weightings stay valid") {
    BZDiagram d(4);
    auto hb = hilbert_basis(d.cone(), 3);
    for (size_t i = 0; i < hb.elements.size(); ++i)
        for (size_t j = i; j < hb.elements.size(); ++j) {
            std::vector<Int> sum = hb.elements[i];
            for (size_t k = 0; k < sum.size(); ++k) sum[k] += hb.elements[j][k];
            CHECK(d.is_valid_weighting(sum));
        }
}

TEST_CASE("mod-m boundary invariant on Hilbert basis elements (m = 3, 4)") {
    for (int m : {3, 4}) {
        BZDiagram d(m);
        auto hb = hilbert_basis(d.cone(), 4);
        CHECK(hb.complete);
        CHECK(!hb.elements.empty());
        for (const auto& p : hb.elements) {
            Int total = 0;
            for (int s = 1; s <= 3; ++s) {
                auto w = d.boundary_weight(p, s);
                for (int i = 0; i < w.rank(); ++i) total += (i + 1) * w.coeff(i);
            }
            CHECK(total % m == 0);
        }
    }
}

TEST_CASE("vertex naming round trip") {
    BZDiagram d(5);
    for (int v = 0; v < d.vertex_count(); ++v) CHECK(d.vertex_by_name(d.vertex_name(v)) == v);
}
