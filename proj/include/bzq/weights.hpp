#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bzq {

using Int = std::int64_t;

/// Dominant integral weight of sl_m in the fundamental-weight basis.
/// rank() == m-1 and coeff(i) is the coefficient of omega_{i+1}, all >= 0.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<Int> coeffs);
    static DominantWeight zero(int rank);
    static DominantWeight fundamental(int rank, int i);  // omega_i, 1-based

    int rank() const { return static_cast<int>(c_.size()); }
    Int coeff(int i) const { return c_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;
    Int coeff_sum() const;

    /// Partition representative in the epsilon basis: m entries, last one 0.
    std::vector<Int> partition() const;

    DominantWeight operator+(const DominantWeight& o) const;
    bool operator==(const DominantWeight& o) const { return c_ == o.c_; }
    auto operator<=>(const DominantWeight& o) const = default;

    std::string to_string() const;  // "c1,c2,...,c_{m-1}"

private:
    std::vector<Int> c_;
};

/// Highest weight of the dual representation: reversed coefficient list.
DominantWeight dual(const DominantWeight& w);

/// A tuple of dominant weights of common rank (one per tree leaf).
struct WeightVector {
    std::vector<DominantWeight> entries;

    explicit WeightVector(std::vector<DominantWeight> e);
    int rank() const { return entries.empty() ? 0 : entries.front().rank(); }
    size_t size() const { return entries.size(); }
    const DominantWeight& operator[](size_t i) const { return entries[i]; }
};

/// Parse "1,0;1,0;1,0" into a WeightVector (leaves separated by ';').
WeightVector parse_weight_vector(const std::string& text);
DominantWeight parse_weight(const std::string& text);

/// Dimension of the sl_{rank+1} irreducible with highest weight w.
Int weyl_dim(const DominantWeight& w);

/// Decomposition of V(a) (x) V(b) into irreducibles with multiplicities.
/// Klimyk's formula with Freudenthal weight multiplicities; rank <= 4.
std::map<DominantWeight, Int> tensor_decompose(const DominantWeight& a,
                                               const DominantWeight& b);

/// Multiplicity of the trivial module in V(l_1) (x) ... (x) V(l_n).
Int invariant_dim(const WeightVector& lambdas);

/// Weight multiplicities of V(w), keyed by dominant partition representative.
std::map<std::vector<Int>, Int> dominant_weight_multiplicities(const DominantWeight& w);

/// Dimension of the GL_n irreducible with highest weight (d,d,d,0,...,0).
Int gl_dim_omega3(int n, Int d);

}  // namespace bzq
