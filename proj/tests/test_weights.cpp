#include <doctest.h>

#include <algorithm>
#include <map>

#include "bzq/weights.hpp"

using namespace bzq;

namespace {

DominantWeight w(std::vector<Int> c) { return DominantWeight(std::move(c)); }

// Test-only oracle: decompose V(a)(x)V(b) by peeling highest weights off the
// convolved weight multiset. Independent of the Klimyk signed sum.
std::map<DominantWeight, Int> brute_force_decompose(const DominantWeight& a,
                                                    const DominantWeight& b) {
    auto expand = [](const DominantWeight& v) {
        std::map<std::vector<Int>, Int> weights;
        for (const auto& [dom, mult] : dominant_weight_multiplicities(v)) {
            std::vector<Int> p = dom;
            std::sort(p.begin(), p.end());
            do {
                weights[p] += mult;
            } while (std::next_permutation(p.begin(), p.end()));
        }
        return weights;
    };
    std::map<std::vector<Int>, Int> prod;
    for (const auto& [x, mx] : expand(a))
        for (const auto& [y, my] : expand(b)) {
            std::vector<Int> s(x.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
            prod[s] += mx * my;
        }
    std::map<DominantWeight, Int> result;
    while (!prod.empty()) {
        // Highest remaining dominant weight: maximal in dominance order among
        // weakly-decreasing representatives; lexicographic max works here.
        auto best = prod.end();
        for (auto it = prod.begin(); it != prod.end(); ++it) {
            const auto& p = it->first;
            bool dec = true;
            for (size_t i = 0; i + 1 < p.size(); ++i) dec = dec && p[i] >= p[i + 1];
            if (!dec || it->second == 0) continue;
            if (best == prod.end() || it->first > best->first) best = it;
        }
        if (best == prod.end()) break;
        std::vector<Int> hw = best->first;
        Int mult = best->second;
        std::vector<Int> c(hw.size() - 1);
        for (size_t i = 0; i + 1 < hw.size(); ++i) c[i] = hw[i] - hw[i + 1];
        DominantWeight comp(c);
        result[comp] += mult;
        for (const auto& [dom, m2] : dominant_weight_multiplicities(comp)) {
            std::vector<Int> p = dom;
            std::sort(p.begin(), p.end());
            do {
                auto it = prod.find(p);
                it->second -= mult * m2;
                if (it->second == 0) prod.erase(it);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    return result;
}

}  // namespace

TEST_CASE("dual reverses the coefficient list") {
    CHECK(dual(w({1, 0})) == w({0, 1}));
    CHECK(dual(w({1, 1})) == w({1, 1}));
    CHECK(dual(w({0, 1, 0, 0})) == w({0, 0, 1, 0}));
}

TEST_CASE("weyl_dim on small sl_3 and sl_4 weights") {
    CHECK(weyl_dim(w({1, 0})) == 3);
    CHECK(weyl_dim(w({0, 1})) == 3);
    CHECK(weyl_dim(w({1, 1})) == 8);
    CHECK(weyl_dim(w({2, 0})) == 6);
    CHECK(weyl_dim(w({0, 0})) == 1);
    CHECK(weyl_dim(w({0, 1, 0})) == 6);     // sl_4 Lambda^2
    CHECK(weyl_dim(w({1, 0, 1})) == 15);    // sl_4 adjoint
    CHECK(weyl_dim(w({0, 1, 0, 0})) == 10); // sl_5 Lambda^2
}

TEST_CASE("tensor_decompose matches the named sl_3 products") {
    auto d1 = tensor_decompose(w({1, 0}), w({1, 0}));
    CHECK(d1.size() == 2);
    CHECK(d1[w({2, 0})] == 1);
    CHECK(d1[w({0, 1})] == 1);

    auto d2 = tensor_decompose(w({1, 0}), w({0, 1}));
    CHECK(d2.size() == 2);
    CHECK(d2[w({1, 1})] == 1);
    CHECK(d2[w({0, 0})] == 1);

    auto d3 = tensor_decompose(w({0, 0}), w({2, 1}));
    CHECK(d3.size() == 1);
    CHECK(d3[w({2, 1})] == 1);
}

TEST_CASE("tensor_decompose agrees with the peeling oracle and Weyl dims (sl_3)") {
    for (Int a1 = 0; a1 <= 2; ++a1)
        for (Int a2 = 0; a2 <= 2; ++a2)
            for (Int b1 = 0; b1 <= 2; ++b1)
                for (Int b2 = 0; b2 <= 2; ++b2) {
                    DominantWeight a({a1, a2}), b({b1, b2});
                    auto dec = tensor_decompose(a, b);
                    CHECK(dec == brute_force_decompose(a, b));
                    CHECK(dec == tensor_decompose(b, a));
                    Int total = 0;
                    for (const auto& [v, mult] : dec) total += mult * weyl_dim(v);
                    CHECK(total == weyl_dim(a) * weyl_dim(b));
                }
}

TEST_CASE("tensor_decompose dimension check up to coefficient 4 (sl_3)") {
    for (Int a1 = 0; a1 <= 4; ++a1)
        for (Int a2 = 0; a2 <= 4; ++a2)
            for (Int b1 = 0; b1 <= 4; ++b1)
                for (Int b2 = 0; b2 <= 4; ++b2) {
                    DominantWeight a({a1, a2}), b({b1, b2});
                    Int total = 0;
                    for (const auto& [v, mult] : tensor_decompose(a, b))
                        total += mult * weyl_dim(v);
                    CHECK(total == weyl_dim(a) * weyl_dim(b));
                }
}

TEST_CASE("invariant_dim on the named examples") {
    CHECK(invariant_dim(WeightVector({w({1, 0}), w({1, 0}), w({1, 0})})) == 1);
    CHECK(invariant_dim(WeightVector({w({1, 0}), w({0, 1})})) == 1);
    CHECK(invariant_dim(WeightVector({w({1, 1}), w({1, 1}), w({1, 1})})) == 2);
    CHECK(invariant_dim(WeightVector({w({1, 0}), w({0, 0}), w({0, 0})})) == 0);
}

TEST_CASE("invariant_dim is permutation- and dual-invariant") {
    std::vector<DominantWeight> pool;
    for (Int c1 = 0; c1 <= 2; ++c1)
        for (Int c2 = 0; c2 <= 2; ++c2) pool.push_back(w({c1, c2}));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool) {
                Int d = invariant_dim(WeightVector({a, b, c}));
                CHECK(d == invariant_dim(WeightVector({c, a, b})));
                CHECK(d == invariant_dim(WeightVector({b, a, c})));
                CHECK(d == invariant_dim(WeightVector({dual(a), dual(b), dual(c)})));
            }
}

TEST_CASE("Schur orthogonality: V(l) (x) V(l*) has a unique invariant") {
    for (Int c1 = 0; c1 <= 3; ++c1)
        for (Int c2 = 0; c2 <= 3; ++c2) {
            DominantWeight l({c1, c2});
            CHECK(invariant_dim(WeightVector({l, dual(l)})) == 1);
        }
}

TEST_CASE("gl_dim_omega3 on the named examples") {
    CHECK(gl_dim_omega3(6, 1) == 20);
    CHECK(gl_dim_omega3(4, 1) == 4);
    CHECK(gl_dim_omega3(5, 0) == 1);
    CHECK(gl_dim_omega3(3, 7) == 1);
    CHECK(gl_dim_omega3(5, 3) == 175);
}

TEST_CASE("parse_weight_vector round trip") {
    auto v = parse_weight_vector("1,0;0,1;2,2");
    CHECK(v.size() == 3);
    CHECK(v[0] == w({1, 0}));
    CHECK(v[1] == w({0, 1}));
    CHECK(v[2] == w({2, 2}));
    CHECK_THROWS(parse_weight_vector("1,0;1"));  // mixed rank
    CHECK_THROWS(parse_weight_vector("1,x"));
}

TEST_CASE("rank guard") {
    CHECK_THROWS(tensor_decompose(w({1, 0, 0, 0, 0}), w({1, 0, 0, 0, 0})));
}
