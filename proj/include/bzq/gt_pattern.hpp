#pragma once

#include <array>
#include <string>
#include <vector>

#include "bzq/cone.hpp"

namespace bzq {

/// Gel'fand-Tsetlin pattern for GL_n with top row (lambda,lambda,lambda,0,...,0).
/// rows[r-1] holds row r (length r), row n on top; interlacing
/// x_{r+1,j} >= x_{r,j} >= x_{r+1,j+1} throughout. Columns beyond 3 vanish
/// and the upper-left triangle is pinned at lambda.
struct GTPattern {
    int n = 0;
    Int lambda = 0;
    std::vector<std::vector<Int>> rows;  // rows[r-1], r = 1..n

    Int at(int r, int j) const { return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(j - 1)]; }
    /// Diagonal entries a_{i,k} (k = 1,2,3; i = 1..n-3) as labeled in the
    /// free region: a_{i,3} = x_{n-i,3}, a_{i,2} = x_{n-1-i,2}, a_{i,1} = x_{n-2-i,1}.
    Int diagonal(int i, int k) const;

    GTPattern operator+(const GTPattern& o) const;  // entrywise
    bool operator==(const GTPattern& o) const = default;
    auto operator<=>(const GTPattern& o) const = default;
};

bool interlaces(const GTPattern& p);

/// All patterns with top row (lambda^3, 0^{n-3}); deterministic order.
std::vector<GTPattern> enumerate_patterns(int n, Int lambda);

/// The unique lambda=1 pattern with a_{i-1,3} = a_{j-2,2} = a_{k-3,1} = 1 and
/// everything below those diagonal entries 0 (1 <= i < j < k <= n).
GTPattern embed_generator(int n, int i, int j, int k);

using Triple = std::array<int, 3>;

Triple wedge(const Triple& a, const Triple& b);  // componentwise min
Triple vee(const Triple& a, const Triple& b);    // componentwise max

/// The move {t1,t2} <-> {t1^t2, t1 v t2}; nullopt when the pair is already
/// the wedge/vee pair (identity) or a result is not strictly increasing.
struct WedgeVeeMove {
    Triple a, b;       // input pair
    Triple lo, hi;     // wedge, vee
};
std::vector<WedgeVeeMove> wedge_vee_moves(int n);  // all non-identity moves

struct GTReport {
    int n = 0;
    int degree_bound = 0;
    Int elements_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// (a) every wedge/vee move is an equal-sum relation among the caterpillar
/// quilt generators, (b) every caterpillar quadratic preserves wedge and vee,
/// (c) the two move families give identical factorization-graph components
/// for every P_{T0} element of generator degree <= degree_bound.
GTReport ideal_equality_check(int n, int degree_bound);

struct HilbertCompareRow {
    Int degree = 0;
    Int face_count = 0;     // P_{T0} elements of boundary degree 3d
    Int pattern_count = 0;  // |GT_n(omega_3)| at lambda = d
    Int weyl_dim = 0;       // gl_dim_omega3(n, d)
    bool agree() const { return face_count == pattern_count && pattern_count == weyl_dim; }
};

/// Compare the three independent counts for d = 0..degree_bound.
std::vector<HilbertCompareRow> hilbert_function_compare(int n, int degree_bound);

}  // namespace bzq
