#include "bzq/weights.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bzq {

namespace {

constexpr int kMaxRank = 4;

void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank)
        throw std::invalid_argument("unsupported rank " + std::to_string(rank) +
                                    " (supported: 1.." + std::to_string(kMaxRank) + ")");
}

// Scaled invariant form on sl_m weight space, well defined on representatives
// modulo (1,...,1): <x,y> = m*(x.y) - (sum x)(sum y).
Int form(const std::vector<Int>& x, const std::vector<Int>& y) {
    const Int m = static_cast<Int>(x.size());
    Int dot = 0, sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        sx += x[i];
        sy += y[i];
    }
    return m * dot - sx * sy;
}

std::vector<Int> rho(int m) {
    std::vector<Int> r(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) r[static_cast<size_t>(i)] = m - 1 - i;
    return r;
}

std::vector<Int> add(std::vector<Int> a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// Dominant partitions mu with mu <= lambda in dominance order (same total,
// prefix sums bounded). All of these occur as weights of V(lambda) in type A.
void dominant_below_rec(const std::vector<Int>& lambda, std::vector<Int>& mu, size_t i,
                        Int prefix_lambda, Int prefix_mu, Int total,
                        std::vector<std::vector<Int>>& out) {
    const size_t m = lambda.size();
    if (i + 1 == m) {
        Int last = total - prefix_mu;
        if (last < 0 || (i > 0 && last > mu[i - 1])) return;
        mu[i] = last;
        out.push_back(mu);
        return;
    }
    Int hi = (i == 0) ? lambda[0] : mu[i - 1];
    // Remaining entries are weakly decreasing, so mu_i must leave room.
    for (Int v = hi; v >= 0; --v) {
        if (prefix_mu + v > prefix_lambda + lambda[i]) continue;
        Int remaining = total - prefix_mu - v;
        Int slots = static_cast<Int>(m - i - 1);
        if (remaining > v * slots || remaining < 0) continue;
        mu[i] = v;
        dominant_below_rec(lambda, mu, i + 1, prefix_lambda + lambda[i], prefix_mu + v,
                           total, out);
    }
}

std::vector<std::vector<Int>> dominant_below(const std::vector<Int>& lambda) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> mu(lambda.size(), 0);
    Int total = std::accumulate(lambda.begin(), lambda.end(), Int{0});
    dominant_below_rec(lambda, mu, 0, 0, 0, total, out);
    return out;
}

Int height_below(const std::vector<Int>& lambda, const std::vector<Int>& mu) {
    // lambda - mu = sum a_k alpha_k with a_k the k-th prefix sum of lambda-mu.
    Int h = 0, p = 0;
    for (size_t k = 0; k + 1 < lambda.size(); ++k) {
        p += lambda[k] - mu[k];
        h += p;
    }
    return h;
}

std::vector<std::vector<Int>> positive_roots(int m) {
    std::vector<std::vector<Int>> roots;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<Int> a(static_cast<size_t>(m), 0);
            a[static_cast<size_t>(i)] = 1;
            a[static_cast<size_t>(j)] = -1;
            roots.push_back(std::move(a));
        }
    return roots;
}

using WeightTable = std::map<std::vector<Int>, Int>;

Int lookup_mult(const WeightTable& table, std::vector<Int> v) {
    std::sort(v.begin(), v.end(), std::greater<Int>());
    auto it = table.find(v);
    return it == table.end() ? 0 : it->second;
}

// Freudenthal recursion over the dominant weights of V(lambda).
WeightTable freudenthal(const std::vector<Int>& lambda) {
    const int m = static_cast<int>(lambda.size());
    auto doms = dominant_below(lambda);
    std::sort(doms.begin(), doms.end(), [&](const auto& a, const auto& b) {
        Int ha = height_below(lambda, a), hb = height_below(lambda, b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    const auto roots = positive_roots(m);
    const auto rh = rho(m);
    const auto lr = add(lambda, rh);
    const Int norm_top = form(lr, lr);

    WeightTable table;
    for (const auto& mu : doms) {
        if (mu == lambda) {
            table[mu] = 1;
            continue;
        }
        Int rhs = 0;
        for (const auto& alpha : roots) {
            std::vector<Int> nu = mu;
            for (Int k = 1;; ++k) {
                nu = add(nu, alpha);
                Int mult = lookup_mult(table, nu);
                if (mult == 0) {
                    // Weights of V(lambda) along mu + Z*alpha form an unbroken
                    // string, so the first miss ends the sum.
                    break;
                }
                rhs += mult * form(nu, alpha);
            }
        }
        const auto mr = add(mu, rh);
        Int denom = norm_top - form(mr, mr);
        Int num = 2 * rhs;
        if (denom <= 0 || num % denom != 0)
            throw std::logic_error("freudenthal: non-integral multiplicity");
        table[mu] = num / denom;
    }
    return table;
}

const WeightTable& freudenthal_cached(const std::vector<Int>& lambda) {
    static std::mutex mu;
    static std::map<std::vector<Int>, WeightTable> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, freudenthal(lambda)).first;
    return it->second;
}

DominantWeight from_partition(std::vector<Int> x) {
    std::vector<Int> c(x.size() - 1);
    for (size_t i = 0; i + 1 < x.size(); ++i) c[i] = x[i] - x[i + 1];
    return DominantWeight(std::move(c));
}

}  // namespace

DominantWeight::DominantWeight(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    for (Int v : c_)
        if (v < 0) throw std::invalid_argument("dominant weight needs coefficients >= 0");
}

DominantWeight DominantWeight::zero(int rank) {
    return DominantWeight(std::vector<Int>(static_cast<size_t>(rank), 0));
}

DominantWeight DominantWeight::fundamental(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<Int> c(static_cast<size_t>(rank), 0);
    c[static_cast<size_t>(i - 1)] = 1;
    return DominantWeight(std::move(c));
}

bool DominantWeight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Int v) { return v == 0; });
}

Int DominantWeight::coeff_sum() const {
    return std::accumulate(c_.begin(), c_.end(), Int{0});
}

std::vector<Int> DominantWeight::partition() const {
    std::vector<Int> x(c_.size() + 1, 0);
    for (size_t i = c_.size(); i-- > 0;) x[i] = x[i + 1] + c_[i];
    return x;
}

DominantWeight DominantWeight::operator+(const DominantWeight& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<Int> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return DominantWeight(std::move(c));
}

std::string DominantWeight::to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s;
}

DominantWeight dual(const DominantWeight& w) {
    std::vector<Int> c(w.coeffs());
    std::reverse(c.begin(), c.end());
    return DominantWeight(std::move(c));
}

WeightVector::WeightVector(std::vector<DominantWeight> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("empty weight vector");
    for (const auto& w : entries)
        if (w.rank() != entries.front().rank())
            throw std::invalid_argument("weight vector entries have mixed ranks");
}

DominantWeight parse_weight(const std::string& text) {
    std::vector<Int> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        Int v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad weight coefficient: " + item);
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty weight");
    return DominantWeight(std::move(c));
}

WeightVector parse_weight_vector(const std::string& text) {
    std::vector<DominantWeight> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) entries.push_back(parse_weight(item));
    return WeightVector(std::move(entries));
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Int weyl_product(const std::vector<Int>& mu) {
    const int m = static_cast<int>(mu.size());
    __int128 num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= mu[static_cast<size_t>(i)] - mu[static_cast<size_t>(j)] + j - i;
            den *= j - i;
            __int128 g = gcd128(num, den);
            num /= g;
            den /= g;
        }
    return static_cast<Int>(num / den);
}

}  // namespace

Int weyl_dim(const DominantWeight& w) {
    return weyl_product(w.partition());
}

std::map<std::vector<Int>, Int> dominant_weight_multiplicities(const DominantWeight& w) {
    check_rank(w.rank());
    return freudenthal_cached(w.partition());
}

std::map<DominantWeight, Int> tensor_decompose(const DominantWeight& a,
                                               const DominantWeight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    check_rank(a.rank());
    const int m = a.rank() + 1;

    // Run Klimyk over the weight system of the smaller factor.
    const DominantWeight& big = weyl_dim(a) >= weyl_dim(b) ? a : b;
    const DominantWeight& small = weyl_dim(a) >= weyl_dim(b) ? b : a;

    const auto& table = freudenthal_cached(small.partition());
    const auto pa = big.partition();
    const auto rh = rho(m);

    std::map<DominantWeight, Int> result;
    for (const auto& [dom, mult] : table) {
        std::vector<Int> nu = dom;
        std::sort(nu.begin(), nu.end());
        do {
            std::vector<Int> s(pa.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = pa[i] + nu[i] + rh[i];
            // Straighten lambda + nu + rho: discard on a repeat, otherwise the
            // sorting permutation's sign gives the Klimyk contribution.
            int sign = 1;
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j)
                    if (s[i] < s[j]) {
                        std::swap(s[i], s[j]);
                        sign = -sign;
                    }
            bool repeat = false;
            for (size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] == s[i + 1]) {
                    repeat = true;
                    break;
                }
            if (repeat) continue;
            for (size_t i = 0; i < s.size(); ++i) s[i] -= rh[i];
            result[from_partition(std::move(s))] += sign * mult;
        } while (std::next_permutation(nu.begin(), nu.end()));
    }
    for (auto it = result.begin(); it != result.end();) {
        if (it->second == 0)
            it = result.erase(it);
        else if (it->second < 0)
            throw std::logic_error("tensor_decompose: negative multiplicity");
        else
            ++it;
    }
    return result;
}

Int invariant_dim(const WeightVector& lambdas) {
    check_rank(lambdas.rank());
    std::map<DominantWeight, Int> acc{{lambdas[0], 1}};
    for (size_t i = 1; i < lambdas.size(); ++i) {
        std::map<DominantWeight, Int> next;
        for (const auto& [w, mult] : acc)
            for (const auto& [v, m2] : tensor_decompose(w, lambdas[i]))
                next[v] += mult * m2;
        acc = std::move(next);
    }
    auto it = acc.find(DominantWeight::zero(lambdas.rank()));
    return it == acc.end() ? 0 : it->second;
}

Int gl_dim_omega3(int n, Int d) {
    if (n < 3 || d < 0) throw std::invalid_argument("gl_dim_omega3 needs n >= 3, d >= 0");
    std::vector<Int> mu(static_cast<size_t>(n), 0);
    mu[0] = mu[1] = mu[2] = d;
    return weyl_product(mu);
}

}  // namespace bzq
