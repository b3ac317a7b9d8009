#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bzq/cone.hpp"
#include "bzq/quilt.hpp"
#include "bzq/tree.hpp"

namespace bzq {

/// A minimal generator of Q_T(sl_3): connected support equal to a proper
/// subtree's span, local restriction X, Y or P_ij at each span trinode.
/// Variant 0 reads omega_1 at the subtree's smallest leaf, variant 1 is its
/// entrywise dual.
struct GeneratorTag {
    ProperSubtree subtree;
    int variant = 0;
    Point weighting;
};

/// Local weightings of the single sl_3 triangle, keyed by boundary signature
/// (per side: 0 = zero, 1 = omega_1, 2 = omega_2). Exactly 8 entries:
/// X=(1,1,1), Y=(2,2,2) and the six P_ij.
const std::map<std::array<int, 3>, std::vector<Int>>& triangle_basis();

/// Generators of Q_T(sl_3) built by propagation over proper subtrees,
/// ordered by (leaf mask, variant). Size 2(2^n - n - 1).
std::vector<GeneratorTag> generators(const Quilt& q);

/// The two structured relation families.
struct RelationFamily {
    std::vector<BinomialMove> swaps;   // degree (2,2), across a tree edge
    std::vector<BinomialMove> cubics;  // degree (3,2), XY = P12 P23 P31 lifted
    std::vector<BinomialMove> all() const;
};

RelationFamily relation_families(const Quilt& q, const std::vector<GeneratorTag>& gens);

struct PresentationReport {
    std::string tree_text;
    int degree_bound = 0;
    Int elements_checked = 0;
    struct Failure {
        Point target;
        int components = 0;
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

/// Check fiber-graph connectivity under the given moves for every semigroup
/// element that is a sum of at most degree_bound generators.
PresentationReport verify_presentation(const Quilt& q, const std::vector<GeneratorTag>& gens,
                                       const std::vector<BinomialMove>& moves, int degree_bound);

/// Generators lying on the face F = 0 (every boundary weight a multiple of
/// omega_1). Cross-checked against the odd-subtree criterion by callers.
std::vector<GeneratorTag> p_face_generators(const Quilt& q);

/// Index of the caterpillar generator w_{i,j,k} (all-omega_1 variant on the
/// tripod spanning {i,j,k}) within generators(q).
int caterpillar_generator_index(const Quilt& q, const std::vector<GeneratorTag>& gens, int i,
                                int j, int k);

/// The two exchange families among caterpillar generators w_{i,j,k}:
/// first-entry swaps (valid when r < j and i < s) and last-entry swaps
/// (valid when j < t and s < k); every instance re-verified as an equal-sum
/// quilt relation. Moves are index multisets into the triple list.
struct TripleMove {
    std::array<int, 3> a, b;       // left pair of triples
    std::array<int, 3> c, d;       // right pair of triples
};
std::vector<TripleMove> caterpillar_quadratics(int n);

}  // namespace bzq
