#include "bzq/gt_pattern.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "bzq/presentation.hpp"
#include "bzq/quilt.hpp"
#include "bzq/tree.hpp"
#include "bzq/weights.hpp"

namespace bzq {

Int GTPattern::diagonal(int i, int k) const {
    if (k < 1 || k > 3 || i < 1 || i > n - 3)
        throw std::invalid_argument("diagonal index out of range");
    switch (k) {
        case 3: return at(n - i, 3);
        case 2: return at(n - 1 - i, 2);
        default: return at(n - 2 - i, 1);
    }
}

GTPattern GTPattern::operator+(const GTPattern& o) const {
    if (n != o.n) throw std::invalid_argument("pattern size mismatch");
    GTPattern out = *this;
    out.lambda += o.lambda;
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < rows[r].size(); ++j) out.rows[r][j] += o.rows[r][j];
    return out;
}

bool interlaces(const GTPattern& p) {
    for (int r = 1; r < p.n; ++r)
        for (int j = 1; j <= r; ++j) {
            if (p.at(r + 1, j) < p.at(r, j)) return false;
            if (p.at(r, j) < p.at(r + 1, j + 1)) return false;
        }
    for (int j = 1; j <= p.n; ++j) {
        Int expect = j <= 3 ? p.lambda : 0;
        if (p.at(p.n, j) != expect) return false;
    }
    return p.rows[0][0] >= 0;
}

namespace {

GTPattern blank(int n, Int lambda) {
    GTPattern p;
    p.n = n;
    p.lambda = lambda;
    p.rows.resize(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) p.rows[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(r), 0);
    for (int j = 1; j <= std::min(3, n); ++j) p.rows[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)] = lambda;
    return p;
}

}  // namespace

std::vector<GTPattern> enumerate_patterns(int n, Int lambda) {
    if (n < 3 || lambda < 0) throw std::invalid_argument("enumerate_patterns needs n >= 3, lambda >= 0");
    std::vector<GTPattern> out;
    GTPattern p = blank(n, lambda);
    // Fill rows n-1 down to 1; columns beyond 3 stay 0 by interlacing.
    std::function<void(int, int)> rec = [&](int r, int j) {
        if (r == 0) {
            out.push_back(p);
            return;
        }
        const int cols = std::min(r, 3);
        if (j > cols) {
            rec(r - 1, 1);
            return;
        }
        const Int hi = p.at(r + 1, j);
        const Int lo = p.at(r + 1, j + 1);
        for (Int v = lo; v <= hi; ++v) {
            p.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(j - 1)] = v;
            rec(r, j + 1);
        }
        p.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(j - 1)] = lo;
    };
    rec(n - 1, 1);
    return out;
}

GTPattern embed_generator(int n, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= n)) throw std::invalid_argument("need 1 <= i < j < k <= n");
    GTPattern p = blank(n, 1);
    // Closed form: column 1 is 1 on rows >= n+1-k, column 2 on rows >= n+1-j,
    // column 3 on rows >= n+1-i.
    for (int r = 1; r < n; ++r) {
        if (r >= n + 1 - k) p.rows[static_cast<size_t>(r - 1)][0] = 1;
        if (r >= 2 && r >= n + 1 - j) p.rows[static_cast<size_t>(r - 1)][1] = 1;
        if (r >= 3 && r >= n + 1 - i) p.rows[static_cast<size_t>(r - 1)][2] = 1;
    }
    if (!interlaces(p)) throw std::logic_error("embedded generator fails interlacing");
    return p;
}

Triple wedge(const Triple& a, const Triple& b) {
    return {std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2])};
}

Triple vee(const Triple& a, const Triple& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

std::vector<WedgeVeeMove> wedge_vee_moves(int n) {
    std::vector<Triple> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
    std::vector<WedgeVeeMove> out;
    for (size_t x = 0; x < triples.size(); ++x)
        for (size_t y = x + 1; y < triples.size(); ++y) {
            Triple lo = wedge(triples[x], triples[y]);
            Triple hi = vee(triples[x], triples[y]);
            if (lo == triples[x] || lo == triples[y]) continue;  // comparable pair
            // Wedge/vee of strictly increasing triples stay strictly increasing.
            out.push_back(WedgeVeeMove{triples[x], triples[y], lo, hi});
        }
    return out;
}

namespace {

int triple_index(int n, const Triple& t) {
    int idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (Triple{i, j, k} == t) return idx;
                ++idx;
            }
    throw std::invalid_argument("triple out of range");
}

}  // namespace

GTReport ideal_equality_check(int n, int degree_bound) {
    if (n < 4 || degree_bound < 2)
        throw std::invalid_argument("ideal_equality_check needs n >= 4, degree_bound >= 2");
    GTReport report;
    report.n = n;
    report.degree_bound = degree_bound;

    const Quilt q(caterpillar(n), 3);
    auto gens = generators(q);

    std::vector<Triple> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
    std::vector<Point> w_points;
    for (const auto& t : triples)
        w_points.push_back(
            gens[static_cast<size_t>(caterpillar_generator_index(q, gens, t[0], t[1], t[2]))]
                .weighting);

    auto add = [](const Point& a, const Point& b) {
        Point s(a);
        for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        return s;
    };

    // (a) wedge/vee moves are equal-sum quilt relations.
    std::vector<BinomialMove> wv_moves;
    for (const auto& mv : wedge_vee_moves(n)) {
        const auto lhs = add(w_points[static_cast<size_t>(triple_index(n, mv.a))],
                             w_points[static_cast<size_t>(triple_index(n, mv.b))]);
        const auto rhs = add(w_points[static_cast<size_t>(triple_index(n, mv.lo))],
                             w_points[static_cast<size_t>(triple_index(n, mv.hi))]);
        if (lhs != rhs)
            report.failures.push_back("wedge/vee move is not an equal-sum quilt relation");
        wv_moves.push_back(make_move({triple_index(n, mv.a), triple_index(n, mv.b)},
                                     {triple_index(n, mv.lo), triple_index(n, mv.hi)}));
    }
    std::sort(wv_moves.begin(), wv_moves.end());
    wv_moves.erase(std::unique(wv_moves.begin(), wv_moves.end()), wv_moves.end());

    // (b) caterpillar quadratics preserve wedge and vee.
    std::vector<BinomialMove> quad_moves;
    for (const auto& mv : caterpillar_quadratics(n)) {
        if (wedge(mv.a, mv.b) != wedge(mv.c, mv.d) || vee(mv.a, mv.b) != vee(mv.c, mv.d))
            report.failures.push_back("caterpillar quadratic changes wedge or vee");
        quad_moves.push_back(make_move({triple_index(n, mv.a), triple_index(n, mv.b)},
                                       {triple_index(n, mv.c), triple_index(n, mv.d)}));
    }
    std::sort(quad_moves.begin(), quad_moves.end());
    quad_moves.erase(std::unique(quad_moves.begin(), quad_moves.end()), quad_moves.end());

    // (c) identical components on all elements of degree <= bound.
    std::set<Point> targets;
    Factorization cur;
    std::function<void(size_t, const Point&)> rec = [&](size_t start, const Point& sum) {
        if (!cur.empty()) targets.insert(sum);
        if (cur.size() == static_cast<size_t>(degree_bound)) return;
        for (size_t g = start; g < w_points.size(); ++g) {
            cur.push_back(static_cast<int>(g));
            rec(g, add(sum, w_points[g]));
            cur.pop_back();
        }
    };
    rec(0, Point(static_cast<size_t>(q.num_vars()), 0));
    for (const auto& target : targets) {
        ++report.elements_checked;
        auto factzns = factorizations(target, w_points);
        auto ca = factorization_components(factzns, quad_moves);
        auto cb = factorization_components(factzns, wv_moves);
        // Same partition iff the component ids induce the same blocks.
        std::map<int, int> ab, ba;
        bool same = true;
        for (size_t f = 0; f < factzns.size() && same; ++f) {
            auto ita = ab.find(ca[f]);
            auto itb = ba.find(cb[f]);
            if (ita == ab.end() && itb == ba.end()) {
                ab[ca[f]] = cb[f];
                ba[cb[f]] = ca[f];
            } else {
                same = (ita != ab.end() && ita->second == cb[f]) &&
                       (itb != ba.end() && itb->second == ca[f]);
            }
        }
        if (!same)
            report.failures.push_back("component mismatch at an element of degree <= " +
                                      std::to_string(degree_bound));
    }
    return report;
}

std::vector<HilbertCompareRow> hilbert_function_compare(int n, int degree_bound) {
    if (n < 3 || degree_bound < 0)
        throw std::invalid_argument("hilbert_function_compare needs n >= 3, degree_bound >= 0");
    const Quilt q(caterpillar(n), 3);
    auto eqs = q.cone().equations;
    for (auto& row : q.omega2_zero_rows()) eqs.push_back(std::move(row));
    IntegerCone face(q.num_vars(), std::move(eqs), q.cone().grading);

    std::vector<HilbertCompareRow> rows;
    for (Int d = 0; d <= degree_bound; ++d) {
        HilbertCompareRow row;
        row.degree = d;
        row.face_count = static_cast<Int>(enumerate_at_degree(face, 3 * d).size());
        row.pattern_count = static_cast<Int>(enumerate_patterns(n, d).size());
        row.weyl_dim = gl_dim_omega3(n, d);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bzq
