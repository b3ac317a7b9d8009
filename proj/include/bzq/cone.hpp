#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bzq/weights.hpp"

namespace bzq {

using Point = std::vector<Int>;

/// Sparse integer linear equation: sum of coef*x[var] == rhs.
struct LinearEq {
    std::vector<std::pair<int, Int>> terms;
    Int rhs = 0;
};

/// Nonnegative integer solutions of homogeneous equations, graded by a
/// functional that is strictly positive away from the origin.
struct IntegerCone {
    int num_vars = 0;
    std::vector<LinearEq> equations;  // rhs == 0
    Point grading;                    // one coefficient per variable

    IntegerCone() = default;
    IntegerCone(int vars, std::vector<LinearEq> eqs);
    IntegerCone(int vars, std::vector<LinearEq> eqs, Point grading_coeffs);

    Int degree(const Point& p) const;
    bool contains(const Point& p) const;  // nonnegative and all equations hold
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All nonnegative solutions of the given equations (rhs may be nonzero),
/// by backtracking with interval propagation. Most-constrained variable
/// first, values ascending; output sorted lexicographically.
/// Throws std::logic_error if propagation cannot bound every variable.
std::vector<Point> enumerate_solutions(int num_vars, const std::vector<LinearEq>& eqs);

/// Variant with a dominance filter: subtrees whose variable lower bounds
/// already dominate one of `prune` coordinatewise are skipped.
std::vector<Point> enumerate_solutions_undominated(int num_vars,
                                                   const std::vector<LinearEq>& eqs,
                                                   const std::vector<Point>& prune);

/// Lattice points of the cone with the given grading value.
std::vector<Point> enumerate_at_degree(const IntegerCone& c, Int d);

struct HilbertBasisResult {
    std::vector<Point> elements;  // ordered by (degree, lex)
    bool complete = false;
};

/// Points of grading <= degree_bound that are not sums of two nonzero cone
/// points. `complete` certifies that every point with grading in
/// (degree_bound, 2*degree_bound] decomposes into lower points.
HilbertBasisResult hilbert_basis(const IntegerCone& c, Int degree_bound);

/// Lattice points of the cone mapping to `target` under the rows of `pi`.
std::vector<Point> enumerate_fiber(const IntegerCone& c, const std::vector<LinearEq>& pi,
                                   const Point& target);
Int count_fiber(const IntegerCone& c, const std::vector<LinearEq>& pi, const Point& target);

/// Multiset of generator indices (sorted ascending).
using Factorization = std::vector<int>;

/// Two multisets of generator indices with equal generator sums.
struct BinomialMove {
    Factorization left, right;

    bool operator==(const BinomialMove& o) const = default;
    auto operator<=>(const BinomialMove& o) const = default;
};

BinomialMove make_move(Factorization a, Factorization b);  // canonical order

/// All primitive equal-sum pairs of multisets of size <= d: supports are
/// disjoint and the two sides differ. Output sorted.
std::vector<BinomialMove> relations_up_to_degree(const std::vector<Point>& gens, int d);

/// All multisets of generators summing to target. Aborts with ResourceError
/// beyond 10^6 factorizations.
std::vector<Factorization> factorizations(const Point& target, const std::vector<Point>& gens);

/// Connected component id per factorization under the given moves.
std::vector<int> factorization_components(const std::vector<Factorization>& factzns,
                                          const std::vector<BinomialMove>& moves);

/// True iff the graph on all factorizations of target, with edges given by
/// applying a move to a sub-multiset, is connected.
/// Throws std::invalid_argument if target has no factorization.
bool fiber_graph_connected(const Point& target, const std::vector<Point>& gens,
                           const std::vector<BinomialMove>& moves);

}  // namespace bzq
