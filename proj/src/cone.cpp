#include "bzq/cone.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace bzq {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

Int sat_add(Int a, Int b) {
    if (a >= kInf || b >= kInf) return kInf;
    if (a <= -kInf || b <= -kInf) return -kInf;
    Int s = a + b;
    if (s > kInf) return kInf;
    if (s < -kInf) return -kInf;
    return s;
}

Int sat_mul(Int c, Int x) {
    if (x >= kInf) return c > 0 ? kInf : (c < 0 ? -kInf : 0);
    if (x <= -kInf) return c > 0 ? -kInf : (c < 0 ? kInf : 0);
    return c * x;
}

Int div_floor(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Int div_ceil(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

// Backtracking solver over nonnegative integers with interval propagation.
class Solver {
public:
    Solver(int num_vars, const std::vector<LinearEq>& eqs, const std::vector<Point>* prune)
        : n_(num_vars), eqs_(eqs), prune_(prune), lo_(num_vars, 0), hi_(num_vars, kInf) {
        var_eqs_.resize(static_cast<size_t>(num_vars));
        for (size_t e = 0; e < eqs_.size(); ++e)
            for (const auto& [v, c] : eqs_[e].terms) {
                (void)c;
                var_eqs_[static_cast<size_t>(v)].push_back(static_cast<int>(e));
            }
    }

    // Returns false if the whole search is abandoned by the callback.
    bool run(const std::function<bool(const Point&)>& emit) {
        if (!propagate_all()) return true;
        for (int v = 0; v < n_; ++v)
            if (hi_[static_cast<size_t>(v)] >= kInf)
                throw std::logic_error("enumeration: variable " + std::to_string(v) +
                                       " is unbounded under the given constraints");
        return search(emit);
    }

private:
    bool propagate_eq(int e, std::deque<int>& queue, std::vector<char>& queued) {
        const auto& eq = eqs_[static_cast<size_t>(e)];
        Int min_sum = 0, max_sum = 0;
        for (const auto& [v, c] : eq.terms) {
            const size_t vi = static_cast<size_t>(v);
            min_sum = sat_add(min_sum, c > 0 ? sat_mul(c, lo_[vi]) : sat_mul(c, hi_[vi]));
            max_sum = sat_add(max_sum, c > 0 ? sat_mul(c, hi_[vi]) : sat_mul(c, lo_[vi]));
        }
        if (eq.rhs < min_sum || eq.rhs > max_sum) return false;
        for (const auto& [v, c] : eq.terms) {
            const size_t vi = static_cast<size_t>(v);
            const Int tmin = c > 0 ? sat_mul(c, lo_[vi]) : sat_mul(c, hi_[vi]);
            const Int tmax = c > 0 ? sat_mul(c, hi_[vi]) : sat_mul(c, lo_[vi]);
            const Int others_min = sat_add(min_sum, -tmin);
            const Int others_max = sat_add(max_sum, -tmax);
            // c*x must land in [rhs - others_max, rhs - others_min].
            Int lo_cx = sat_add(eq.rhs, -others_max);
            Int hi_cx = sat_add(eq.rhs, -others_min);
            Int nlo, nhi;
            if (c > 0) {
                nlo = lo_cx <= -kInf ? -kInf : div_ceil(lo_cx, c);
                nhi = hi_cx >= kInf ? kInf : div_floor(hi_cx, c);
            } else {
                nlo = hi_cx >= kInf ? -kInf : div_ceil(hi_cx, c);
                nhi = lo_cx <= -kInf ? kInf : div_floor(lo_cx, c);
            }
            bool changed = false;
            if (nlo > lo_[vi]) {
                lo_[vi] = nlo;
                changed = true;
            }
            if (nhi < hi_[vi]) {
                hi_[vi] = nhi;
                changed = true;
            }
            if (lo_[vi] > hi_[vi]) return false;
            if (changed)
                for (int e2 : var_eqs_[vi])
                    if (!queued[static_cast<size_t>(e2)]) {
                        queued[static_cast<size_t>(e2)] = 1;
                        queue.push_back(e2);
                    }
        }
        return true;
    }

    bool propagate_all() {
        std::deque<int> queue;
        std::vector<char> queued(eqs_.size(), 1);
        for (size_t e = 0; e < eqs_.size(); ++e) queue.push_back(static_cast<int>(e));
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop_front();
            queued[static_cast<size_t>(e)] = 0;
            if (!propagate_eq(e, queue, queued)) return false;
        }
        return true;
    }

    bool dominated() const {
        if (!prune_) return false;
        for (const auto& h : *prune_) {
            bool all = true;
            for (int v = 0; v < n_ && all; ++v)
                all = lo_[static_cast<size_t>(v)] >= h[static_cast<size_t>(v)];
            if (all) return true;
        }
        return false;
    }

    bool search(const std::function<bool(const Point&)>& emit) {
        if (dominated()) return true;
        int pick = -1;
        Int width = kInf;
        for (int v = 0; v < n_; ++v) {
            const size_t vi = static_cast<size_t>(v);
            if (lo_[vi] < hi_[vi] && hi_[vi] - lo_[vi] < width) {
                width = hi_[vi] - lo_[vi];
                pick = v;
            }
        }
        if (pick < 0) {
            Point p(lo_);
            for (const auto& eq : eqs_) {
                Int s = 0;
                for (const auto& [v, c] : eq.terms) s += c * p[static_cast<size_t>(v)];
                if (s != eq.rhs) throw std::logic_error("enumeration: emitted point fails re-check");
            }
            return emit(p);
        }
        const size_t pi = static_cast<size_t>(pick);
        const Int a = lo_[pi], b = hi_[pi];
        const Point save_lo = lo_, save_hi = hi_;
        for (Int x = a; x <= b; ++x) {
            lo_ = save_lo;
            hi_ = save_hi;
            lo_[pi] = hi_[pi] = x;
            if (propagate_all())
                if (!search(emit)) return false;
        }
        lo_ = save_lo;
        hi_ = save_hi;
        return true;
    }

    int n_;
    const std::vector<LinearEq>& eqs_;
    const std::vector<Point>* prune_;
    Point lo_, hi_;
    std::vector<std::vector<int>> var_eqs_;
};

std::vector<Point> solve(int num_vars, const std::vector<LinearEq>& eqs,
                         const std::vector<Point>* prune) {
    std::vector<Point> out;
    Solver s(num_vars, eqs, prune);
    s.run([&](const Point& p) {
        out.push_back(p);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

IntegerCone::IntegerCone(int vars, std::vector<LinearEq> eqs)
    : num_vars(vars), equations(std::move(eqs)), grading(static_cast<size_t>(vars), 1) {}

IntegerCone::IntegerCone(int vars, std::vector<LinearEq> eqs, Point grading_coeffs)
    : num_vars(vars), equations(std::move(eqs)), grading(std::move(grading_coeffs)) {
    if (static_cast<int>(grading.size()) != vars)
        throw std::invalid_argument("grading size mismatch");
}

Int IntegerCone::degree(const Point& p) const {
    Int d = 0;
    for (size_t i = 0; i < grading.size(); ++i) d += grading[i] * p[i];
    return d;
}

bool IntegerCone::contains(const Point& p) const {
    if (static_cast<int>(p.size()) != num_vars) return false;
    for (Int v : p)
        if (v < 0) return false;
    for (const auto& eq : equations) {
        Int s = 0;
        for (const auto& [v, c] : eq.terms) s += c * p[static_cast<size_t>(v)];
        if (s != eq.rhs) return false;
    }
    return true;
}

std::vector<Point> enumerate_solutions(int num_vars, const std::vector<LinearEq>& eqs) {
    return solve(num_vars, eqs, nullptr);
}

std::vector<Point> enumerate_solutions_undominated(int num_vars,
                                                   const std::vector<LinearEq>& eqs,
                                                   const std::vector<Point>& prune) {
    return solve(num_vars, eqs, &prune);
}

namespace {

LinearEq grading_row(const IntegerCone& c, Int d) {
    LinearEq eq;
    eq.rhs = d;
    for (int v = 0; v < c.num_vars; ++v)
        if (c.grading[static_cast<size_t>(v)] != 0)
            eq.terms.emplace_back(v, c.grading[static_cast<size_t>(v)]);
    return eq;
}

}  // namespace

std::vector<Point> enumerate_at_degree(const IntegerCone& c, Int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    auto eqs = c.equations;
    eqs.push_back(grading_row(c, d));
    return enumerate_solutions(c.num_vars, eqs);
}

HilbertBasisResult hilbert_basis(const IntegerCone& c, Int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree_bound must be >= 1");
    HilbertBasisResult result;
    for (Int d = 1; d <= degree_bound; ++d) {
        auto eqs = c.equations;
        eqs.push_back(grading_row(c, d));
        // A point is a new generator iff no known generator sits below it;
        // the solver prunes exactly the dominated region.
        auto found = enumerate_solutions_undominated(c.num_vars, eqs, result.elements);
        for (auto& p : found) result.elements.push_back(std::move(p));
    }
    result.complete = true;
    for (Int d = degree_bound + 1; d <= 2 * degree_bound && result.complete; ++d) {
        auto eqs = c.equations;
        eqs.push_back(grading_row(c, d));
        Solver s(c.num_vars, eqs, &result.elements);
        s.run([&](const Point&) {
            result.complete = false;  // found an indecomposable above the bound
            return false;
        });
    }
    return result;
}

std::vector<Point> enumerate_fiber(const IntegerCone& c, const std::vector<LinearEq>& pi,
                                   const Point& target) {
    if (pi.size() != target.size()) throw std::invalid_argument("fiber target size mismatch");
    auto eqs = c.equations;
    for (size_t i = 0; i < pi.size(); ++i) {
        LinearEq eq = pi[i];
        eq.rhs = target[i];
        eqs.push_back(std::move(eq));
    }
    return enumerate_solutions(c.num_vars, eqs);
}

Int count_fiber(const IntegerCone& c, const std::vector<LinearEq>& pi, const Point& target) {
    return static_cast<Int>(enumerate_fiber(c, pi, target).size());
}

BinomialMove make_move(Factorization a, Factorization b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b.size() < a.size() || (b.size() == a.size() && b < a)) std::swap(a, b);
    return BinomialMove{std::move(a), std::move(b)};
}

namespace {

Point multiset_sum(const Factorization& f, const std::vector<Point>& gens, size_t dim) {
    Point s(dim, 0);
    for (int g : f)
        for (size_t i = 0; i < dim; ++i) s[i] += gens[static_cast<size_t>(g)][i];
    return s;
}

void multisets_rec(const std::vector<Point>& gens, int max_size, int start, Factorization& cur,
                   const std::function<void(const Factorization&)>& visit) {
    if (!cur.empty()) visit(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int g = start; g < static_cast<int>(gens.size()); ++g) {
        cur.push_back(g);
        multisets_rec(gens, max_size, g, cur, visit);
        cur.pop_back();
    }
}

bool disjoint_support(const Factorization& a, const Factorization& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace

std::vector<BinomialMove> relations_up_to_degree(const std::vector<Point>& gens, int d) {
    if (d < 1) throw std::invalid_argument("relation degree must be >= 1");
    if (gens.empty()) return {};
    const size_t dim = gens.front().size();
    std::map<Point, std::vector<Factorization>> by_sum;
    Factorization cur;
    multisets_rec(gens, d, 0, cur, [&](const Factorization& f) {
        by_sum[multiset_sum(f, gens, dim)].push_back(f);
    });
    std::vector<BinomialMove> out;
    for (const auto& [sum, lists] : by_sum) {
        (void)sum;
        for (size_t i = 0; i < lists.size(); ++i)
            for (size_t j = i + 1; j < lists.size(); ++j)
                if (disjoint_support(lists[i], lists[j]))
                    out.push_back(make_move(lists[i], lists[j]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Factorization> factorizations(const Point& target, const std::vector<Point>& gens) {
    constexpr size_t kLimit = 1'000'000;
    std::vector<Factorization> out;
    const size_t dim = target.size();
    Point rem = target;
    Factorization cur;
    // Generators in index order; each prefix keeps rem nonnegative.
    std::function<void(int)> rec = [&](int start) {
        if (std::all_of(rem.begin(), rem.end(), [](Int v) { return v == 0; })) {
            out.push_back(cur);
            if (out.size() > kLimit) throw ResourceError("factorization count exceeds 10^6");
            return;
        }
        for (int g = start; g < static_cast<int>(gens.size()); ++g) {
            const auto& gen = gens[static_cast<size_t>(g)];
            bool ok = true;
            for (size_t i = 0; i < dim && ok; ++i) ok = rem[i] >= gen[i];
            if (!ok) continue;
            for (size_t i = 0; i < dim; ++i) rem[i] -= gen[i];
            cur.push_back(g);
            rec(g);
            cur.pop_back();
            for (size_t i = 0; i < dim; ++i) rem[i] += gen[i];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool contains_submultiset(const Factorization& f, const Factorization& sub) {
    size_t i = 0;
    for (int g : sub) {
        while (i < f.size() && f[i] < g) ++i;
        if (i == f.size() || f[i] != g) return false;
        ++i;
    }
    return true;
}

Factorization apply_move(const Factorization& f, const Factorization& remove,
                         const Factorization& insert) {
    Factorization out;
    out.reserve(f.size() - remove.size() + insert.size());
    size_t i = 0;
    for (int g : remove) {
        while (f[i] != g) out.push_back(f[i++]);
        ++i;  // drop one copy
    }
    while (i < f.size()) out.push_back(f[i++]);
    out.insert(out.end(), insert.begin(), insert.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<int> factorization_components(const std::vector<Factorization>& factzns,
                                          const std::vector<BinomialMove>& moves) {
    std::map<Factorization, int> index;
    for (size_t i = 0; i < factzns.size(); ++i) index[factzns[i]] = static_cast<int>(i);
    std::vector<int> comp(factzns.size(), -1);
    int next = 0;
    for (size_t s = 0; s < factzns.size(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = next++;
        std::deque<int> queue{static_cast<int>(s)};
        comp[s] = id;
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            const auto& fac = factzns[static_cast<size_t>(f)];
            auto try_edge = [&](const Factorization& remove, const Factorization& insert) {
                if (!contains_submultiset(fac, remove)) return;
                auto g = apply_move(fac, remove, insert);
                auto it = index.find(g);
                if (it == index.end())
                    throw std::logic_error("move produced an unknown factorization");
                if (comp[static_cast<size_t>(it->second)] < 0) {
                    comp[static_cast<size_t>(it->second)] = id;
                    queue.push_back(it->second);
                }
            };
            for (const auto& mv : moves) {
                try_edge(mv.left, mv.right);
                try_edge(mv.right, mv.left);
            }
        }
    }
    return comp;
}

bool fiber_graph_connected(const Point& target, const std::vector<Point>& gens,
                           const std::vector<BinomialMove>& moves) {
    auto factzns = factorizations(target, gens);
    if (factzns.empty()) throw std::invalid_argument("target is not in the semigroup");
    auto comp = factorization_components(factzns, moves);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace bzq
