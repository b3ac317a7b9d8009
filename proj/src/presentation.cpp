#include "bzq/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace bzq {

namespace {

int dual_reading(int r) { return r == 1 ? 2 : 1; }

}  // namespace

const std::map<std::array<int, 3>, std::vector<Int>>& triangle_basis() {
    static const auto table = [] {
        BZDiagram dia(3);
        auto hb = hilbert_basis(dia.cone(), 3);
        if (!hb.complete || hb.elements.size() != 8)
            throw std::logic_error("sl_3 triangle Hilbert basis is not the expected 8 elements");
        std::map<std::array<int, 3>, std::vector<Int>> out;
        for (const auto& p : hb.elements) {
            std::array<int, 3> sig{};
            for (int s = 1; s <= 3; ++s) {
                auto w = dia.boundary_weight(p, s);
                if (w.coeff(0) + w.coeff(1) > 1)
                    throw std::logic_error("triangle generator with non-fundamental boundary");
                sig[static_cast<size_t>(s - 1)] = w.coeff(0) == 1 ? 1 : (w.coeff(1) == 1 ? 2 : 0);
            }
            out[sig] = p;
        }
        if (out.size() != 8) throw std::logic_error("triangle boundary signatures collide");
        return out;
    }();
    return table;
}

std::vector<GeneratorTag> generators(const Quilt& q) {
    if (q.m() != 3) throw std::invalid_argument("generators are defined for m = 3");
    const Tree& tree = q.tree();
    const auto& basis = triangle_basis();

    std::vector<GeneratorTag> out;
    for (const auto& sub : proper_subtrees(tree)) {
        for (int variant = 0; variant <= 1; ++variant) {
            Point values(static_cast<size_t>(q.num_vars()), 0);
            const int start_leaf = sub.leaves.front();
            // Walk the span from the smallest leaf; each trinode's reading on
            // the arriving edge determines its local triangle.
            struct Item {
                int trinode;
                int from;  // vertex we arrived from
                int reading;
            };
            std::deque<Item> queue;
            queue.push_back({tree.leaf_neighbor(start_leaf), start_leaf, variant == 0 ? 1 : 2});
            while (!queue.empty()) {
                auto [t, from, reading] = queue.front();
                queue.pop_front();
                const int deg = sub.span_degree[static_cast<size_t>(t)];
                const int in_side = q.side_of(t, make_edge(t, from));
                std::array<int, 3> sig{};
                if (deg == 3) {
                    sig = {reading, reading, reading};
                } else {
                    sig[static_cast<size_t>(in_side - 1)] = reading;
                    for (int s = 1; s <= 3; ++s) {
                        const Edge e = q.edge_of(t, s);
                        const int other = e.first == t ? e.second : e.first;
                        if (s != in_side && sub.in_span[static_cast<size_t>(other)])
                            sig[static_cast<size_t>(s - 1)] = dual_reading(reading);
                    }
                }
                const auto& local = basis.at(sig);
                for (int v = 0; v < q.diagram().vertex_count(); ++v)
                    values[static_cast<size_t>(q.var_index(t, v))] = local[static_cast<size_t>(v)];
                // Continue across the other span edges.
                for (int s = 1; s <= 3; ++s) {
                    const Edge e = q.edge_of(t, s);
                    const int other = e.first == t ? e.second : e.first;
                    if (s == in_side || !tree.is_trinode(other) ||
                        !sub.in_span[static_cast<size_t>(other)])
                        continue;
                    const int own_reading = sig[static_cast<size_t>(s - 1)];
                    queue.push_back({other, t, dual_reading(own_reading)});
                }
            }
            if (!q.is_valid(values))
                throw std::logic_error("propagated generator violates quilt constraints");
            if (q.support(values) != sub.span_edges)
                throw std::logic_error("propagated generator support mismatch");
            out.push_back(GeneratorTag{sub, variant, std::move(values)});
        }
    }
    return out;
}

std::vector<BinomialMove> RelationFamily::all() const {
    std::vector<BinomialMove> out = swaps;
    out.insert(out.end(), cubics.begin(), cubics.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Point add_points(const Point& a, const Point& b) {
    Point s(a);
    for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
}

}  // namespace

RelationFamily relation_families(const Quilt& q, const std::vector<GeneratorTag>& gens) {
    RelationFamily fam;
    const Tree& tree = q.tree();
    std::map<Point, int> index;
    for (size_t i = 0; i < gens.size(); ++i) index[gens[i].weighting] = static_cast<int>(i);

    // Swaps: recombine two generators across an internal edge; keep the move
    // when both recombinations glue and are themselves generators.
    std::set<BinomialMove> swaps;
    for (const auto& e : tree.internal_edges()) {
        // Trinodes on the e.first side of the edge.
        std::vector<char> side_a(static_cast<size_t>(tree.last_trinode() + 1), 0);
        std::deque<int> queue{e.first};
        side_a[static_cast<size_t>(e.first)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int nb : tree.neighbors(v)) {
                if (make_edge(v, nb) == e || !tree.is_trinode(nb)) continue;
                if (!side_a[static_cast<size_t>(nb)]) {
                    side_a[static_cast<size_t>(nb)] = 1;
                    queue.push_back(nb);
                }
            }
        }
        auto recombine = [&](const Point& left, const Point& right) {
            Point out(left.size());
            for (int t = tree.first_trinode(); t <= tree.last_trinode(); ++t)
                for (int v = 0; v < q.diagram().vertex_count(); ++v) {
                    const size_t idx = static_cast<size_t>(q.var_index(t, v));
                    out[idx] = side_a[static_cast<size_t>(t)] ? left[idx] : right[idx];
                }
            return out;
        };
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i; j < gens.size(); ++j) {
                Point g3 = recombine(gens[i].weighting, gens[j].weighting);
                Point g4 = recombine(gens[j].weighting, gens[i].weighting);
                if (!q.is_valid(g3) || !q.is_valid(g4)) continue;
                auto it3 = index.find(g3);
                auto it4 = index.find(g4);
                if (it3 == index.end() || it4 == index.end()) continue;
                Factorization lhs{static_cast<int>(i), static_cast<int>(j)};
                Factorization rhs{it3->second, it4->second};
                std::sort(rhs.begin(), rhs.end());
                if (lhs == rhs) continue;
                swaps.insert(make_move(lhs, rhs));
            }
    }
    fam.swaps.assign(swaps.begin(), swaps.end());

    // Cubics: lift XY = P12 P23 P31 at each trinode.
    const auto& basis = triangle_basis();
    const auto& x_local = basis.at({1, 1, 1});
    const auto& y_local = basis.at({2, 2, 2});
    const auto& p12 = basis.at({1, 2, 0});
    const auto& p23 = basis.at({0, 1, 2});
    const auto& p31 = basis.at({2, 0, 1});
    std::set<BinomialMove> cubics;
    for (int t = q.tree().first_trinode(); t <= q.tree().last_trinode(); ++t) {
        std::vector<int> xs, ys, c12, c23, c31;
        for (size_t i = 0; i < gens.size(); ++i) {
            auto local = q.restrict_to_trinode(gens[i].weighting, t);
            if (local == x_local) xs.push_back(static_cast<int>(i));
            if (local == y_local) ys.push_back(static_cast<int>(i));
            if (local == p12) c12.push_back(static_cast<int>(i));
            if (local == p23) c23.push_back(static_cast<int>(i));
            if (local == p31) c31.push_back(static_cast<int>(i));
        }
        for (int a : xs)
            for (int b : ys) {
                const Point target =
                    add_points(gens[static_cast<size_t>(a)].weighting,
                               gens[static_cast<size_t>(b)].weighting);
                for (int c : c12) {
                    const auto& gc = gens[static_cast<size_t>(c)].weighting;
                    bool ok = true;
                    for (size_t k = 0; k < target.size() && ok; ++k) ok = gc[k] <= target[k];
                    if (!ok) continue;
                    for (int d : c23) {
                        const auto& gd = gens[static_cast<size_t>(d)].weighting;
                        Point rem(target.size());
                        bool ok2 = true;
                        for (size_t k = 0; k < target.size() && ok2; ++k) {
                            rem[k] = target[k] - gc[k] - gd[k];
                            ok2 = rem[k] >= 0;
                        }
                        if (!ok2) continue;
                        auto it = index.find(rem);
                        if (it == index.end()) continue;
                        // Third factor must carry the P31 restriction here.
                        if (q.restrict_to_trinode(rem, t) != p31) continue;
                        cubics.insert(
                            make_move({a, b}, {c, d, it->second}));
                    }
                }
            }
    }
    fam.cubics.assign(cubics.begin(), cubics.end());
    return fam;
}

PresentationReport verify_presentation(const Quilt& q, const std::vector<GeneratorTag>& gens,
                                       const std::vector<BinomialMove>& moves,
                                       int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
    PresentationReport report;
    report.tree_text = render(q.tree());
    report.degree_bound = degree_bound;

    std::vector<Point> points;
    points.reserve(gens.size());
    for (const auto& g : gens) points.push_back(g.weighting);

    std::set<Point> targets;
    Factorization cur;
    std::function<void(size_t, const Point&)> rec = [&](size_t start, const Point& sum) {
        if (!cur.empty()) targets.insert(sum);
        if (cur.size() == static_cast<size_t>(degree_bound)) return;
        for (size_t g = start; g < points.size(); ++g) {
            cur.push_back(static_cast<int>(g));
            rec(g, add_points(sum, points[g]));
            cur.pop_back();
        }
    };
    rec(0, Point(points.empty() ? 0 : points.front().size(), 0));

    for (const auto& target : targets) {
        ++report.elements_checked;
        auto factzns = factorizations(target, points);
        auto comp = factorization_components(factzns, moves);
        int num = *std::max_element(comp.begin(), comp.end()) + 1;
        if (num > 1) report.failures.push_back({target, num});
    }
    return report;
}

std::vector<GeneratorTag> p_face_generators(const Quilt& q) {
    std::vector<GeneratorTag> out;
    for (auto& g : generators(q))
        if (q.omega2_functional(g.weighting) == 0) out.push_back(std::move(g));
    return out;
}

int caterpillar_generator_index(const Quilt& q, const std::vector<GeneratorTag>& gens, int i,
                                int j, int k) {
    (void)q;
    const std::uint32_t mask = (1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1));
    for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g].subtree.leaf_mask == mask && gens[g].variant == 0)
            return static_cast<int>(g);
    throw std::invalid_argument("no caterpillar generator for that triple");
}

std::vector<TripleMove> caterpillar_quadratics(int n) {
    if (n < 4) throw std::invalid_argument("caterpillar_quadratics needs n >= 4");
    std::vector<std::array<int, 3>> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});

    const Quilt q(caterpillar(n), 3);
    auto gens = generators(q);
    auto gen_point = [&](const std::array<int, 3>& t) -> const Point& {
        return gens[static_cast<size_t>(
                        caterpillar_generator_index(q, gens, t[0], t[1], t[2]))]
            .weighting;
    };

    std::set<std::array<std::array<int, 3>, 4>> seen;
    std::vector<TripleMove> out;
    auto emit = [&](std::array<int, 3> a, std::array<int, 3> b, std::array<int, 3> c,
                    std::array<int, 3> d) {
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if (std::array{a, b} == std::array{c, d}) return;
        if (std::array{c, d} < std::array{a, b}) {
            std::swap(a, c);
            std::swap(b, d);
        }
        if (!seen.insert({a, b, c, d}).second) return;
        // Re-verify as an equal-sum relation among the quilt weightings.
        if (add_points(gen_point(a), gen_point(b)) != add_points(gen_point(c), gen_point(d)))
            throw std::logic_error("caterpillar exchange is not an equal-sum relation");
        out.push_back(TripleMove{a, b, c, d});
    };

    for (const auto& s : triples)
        for (const auto& t : triples) {
            auto [i, j, k] = s;
            auto [r, ss, tt] = t;
            // First-entry exchange: needs r < j and i < ss.
            if (i != r && r < j && i < ss)
                emit(s, t, {r, j, k}, {i, ss, tt});
            // Last-entry exchange: needs j < tt and ss < k.
            if (k != tt && j < tt && ss < k)
                emit(s, t, {i, j, tt}, {r, ss, k});
        }
    return out;
}

}  // namespace bzq
