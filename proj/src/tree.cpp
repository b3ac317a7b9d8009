#include "bzq/tree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace bzq {

Tree::Tree(int n, std::vector<std::array<int, 3>> trinode_neighbors)
    : n_(n), rotation_(std::move(trinode_neighbors)) {
    if (n_ < 3) throw ParseError("a trivalent tree needs at least 3 leaves");
    if (static_cast<int>(rotation_.size()) != n_ - 2)
        throw ParseError("expected " + std::to_string(n_ - 2) + " trinodes");
    adj_.assign(static_cast<size_t>(2 * n_ - 1), {});
    std::set<Edge> seen;
    for (int t = first_trinode(); t <= last_trinode(); ++t)
        for (int nb : rotation(t)) {
            if (nb < 1 || nb > last_trinode() || nb == t)
                throw ParseError("bad neighbor id " + std::to_string(nb));
            if (seen.insert(make_edge(t, nb)).second) {
                adj_[static_cast<size_t>(t)].push_back(nb);
                adj_[static_cast<size_t>(nb)].push_back(t);
            }
        }
    for (int v = 1; v <= n_; ++v)
        if (adj_[static_cast<size_t>(v)].size() != 1)
            throw ParseError("leaf " + std::to_string(v) + " has degree " +
                             std::to_string(adj_[static_cast<size_t>(v)].size()));
    for (int t = first_trinode(); t <= last_trinode(); ++t)
        if (adj_[static_cast<size_t>(t)].size() != 3)
            throw ParseError("internal vertex of degree " +
                             std::to_string(adj_[static_cast<size_t>(t)].size()));
    if (static_cast<int>(seen.size()) != 2 * n_ - 3)
        throw ParseError("edge count is not 2n-3");
    // Connectivity (acyclicity follows from the vertex/edge count).
    std::vector<char> vis(adj_.size(), 0);
    std::deque<int> queue{1};
    vis[1] = 1;
    int count = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++count;
        for (int nb : adj_[static_cast<size_t>(v)])
            if (!vis[static_cast<size_t>(nb)]) {
                vis[static_cast<size_t>(nb)] = 1;
                queue.push_back(nb);
            }
    }
    if (count != 2 * n_ - 2) throw ParseError("tree is not connected");
}

const std::vector<int>& Tree::neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

const std::array<int, 3>& Tree::rotation(int t) const {
    return rotation_[static_cast<size_t>(t - first_trinode())];
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= last_trinode(); ++v)
        for (int nb : adj_[static_cast<size_t>(v)])
            if (v < nb) out.push_back({v, nb});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> Tree::internal_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges())
        if (is_trinode(e.first) && is_trinode(e.second)) out.push_back(e);
    return out;
}

int Tree::leaf_neighbor(int leaf) const {
    if (!is_leaf(leaf)) throw std::invalid_argument("not a leaf");
    return adj_[static_cast<size_t>(leaf)].front();
}

std::vector<int> Tree::path(int a, int b) const {
    std::vector<int> parent(adj_.size(), 0);
    std::deque<int> queue{a};
    parent[static_cast<size_t>(a)] = a;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (int nb : adj_[static_cast<size_t>(v)])
            if (parent[static_cast<size_t>(nb)] == 0) {
                parent[static_cast<size_t>(nb)] = v;
                queue.push_back(nb);
            }
    }
    std::vector<int> out;
    for (int v = b; v != a; v = parent[static_cast<size_t>(v)]) out.push_back(v);
    out.push_back(a);
    std::reverse(out.begin(), out.end());
    return out;
}

int Tree::min_leaf_through(int from, int to) const {
    int best = n_ + 1;
    std::deque<std::pair<int, int>> queue{{to, from}};
    while (!queue.empty()) {
        auto [v, prev] = queue.front();
        queue.pop_front();
        if (is_leaf(v)) best = std::min(best, v);
        for (int nb : adj_[static_cast<size_t>(v)])
            if (nb != prev) queue.push_back({nb, v});
    }
    return best;
}

bool Tree::operator==(const Tree& o) const {
    if (n_ != o.n_) return false;
    auto canon = [](std::array<int, 3> r) {
        int k = static_cast<int>(std::min_element(r.begin(), r.end()) - r.begin());
        return std::array<int, 3>{r[static_cast<size_t>(k)], r[static_cast<size_t>((k + 1) % 3)],
                                  r[static_cast<size_t>((k + 2) % 3)]};
    };
    for (int t = first_trinode(); t <= last_trinode(); ++t)
        if (canon(rotation(t)) != canon(o.rotation(t))) return false;
    return true;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    int parse_label() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a leaf label");
        long v = std::stol(s.substr(start, pos - start));
        if (v < 1) fail("leaf labels must be positive");
        return static_cast<int>(v);
    }

    // A node is a leaf label or a parenthesized list of nodes.
    struct Node {
        int leaf = 0;  // nonzero for leaves
        std::vector<Node> children;
    };

    Node parse_node() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            Node node;
            while (true) {
                node.children.push_back(parse_node());
                skip_ws();
                if (pos >= s.size()) fail("missing ')'");
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] == ')') {
                    ++pos;
                    return node;
                }
                fail("expected ',' or ')'");
            }
        }
        Node node;
        node.leaf = parse_label();
        return node;
    }
};

struct Builder {
    std::vector<std::array<int, 3>> trinodes;  // neighbor triples, temp ids
    std::vector<int> leaf_labels;

    // Temp ids: leaves get negative ids -1.. (index into leaf_labels),
    // trinodes get nonnegative ids (index into trinodes).
    int add_leaf(int label) {
        leaf_labels.push_back(label);
        return -static_cast<int>(leaf_labels.size());
    }

    int add_trinode() {
        trinodes.push_back({0, 0, 0});
        return static_cast<int>(trinodes.size()) - 1;
    }
};

constexpr int kNoParent = std::numeric_limits<int>::min();

// Build the subtree for a node; returns its temp id. Nested lists must be
// pairs; rotation at a nested trinode is (parent, first child, second child).
int build_node(const Parser::Node& node, Builder& b, int parent) {
    if (node.leaf) return b.add_leaf(node.leaf);
    if (node.children.size() != 2)
        throw ParseError("internal vertex of degree " +
                         std::to_string(node.children.size() + 1));
    int t = b.add_trinode();
    int a = build_node(node.children[0], b, t);
    int c = build_node(node.children[1], b, t);
    b.trinodes[static_cast<size_t>(t)] = {parent, a, c};
    return t;
}

}  // namespace

Tree parse_tree(const std::string& text) {
    Parser parser(text);
    auto root = parser.parse_node();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    if (root.leaf) throw ParseError("a single leaf is not a tree");

    Builder b;
    if (root.children.size() == 3) {
        int t = b.add_trinode();
        std::array<int, 3> kids{};
        for (size_t i = 0; i < 3; ++i) kids[i] = build_node(root.children[i], b, t);
        b.trinodes[static_cast<size_t>(t)] = kids;  // no parent; reading order
    } else if (root.children.size() == 2) {
        // Edge joining two subtrees; at most one side may be a leaf.
        int a = build_node(root.children[0], b, kNoParent);
        int c = build_node(root.children[1], b, kNoParent);
        if (a < 0 && c < 0) throw ParseError("a bare edge between two leaves is not trivalent");
        if (a >= 0) b.trinodes[static_cast<size_t>(a)][0] = c;
        if (c >= 0) b.trinodes[static_cast<size_t>(c)][0] = a;
    } else {
        throw ParseError("internal vertex of degree " + std::to_string(root.children.size()));
    }

    const int n = static_cast<int>(b.leaf_labels.size());
    if (static_cast<int>(b.trinodes.size()) != n - 2)
        throw ParseError("vertex counts do not form a trivalent tree");

    // Validate labels are exactly 1..n.
    std::vector<int> sorted = b.leaf_labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (i > 0 && sorted[static_cast<size_t>(i)] == sorted[static_cast<size_t>(i - 1)])
            throw ParseError("duplicate leaf label " + std::to_string(sorted[static_cast<size_t>(i)]));
        if (sorted[static_cast<size_t>(i)] != i + 1)
            throw ParseError("leaf labels must be exactly 1.." + std::to_string(n));
    }

    // Map temp ids to final ids: leaf -k -> label, trinode j -> n+1+j.
    auto final_id = [&](int temp) {
        return temp < 0 ? b.leaf_labels[static_cast<size_t>(-temp - 1)] : n + 1 + temp;
    };
    std::vector<std::array<int, 3>> rot;
    rot.reserve(b.trinodes.size());
    for (const auto& tri : b.trinodes)
        rot.push_back({final_id(tri[0]), final_id(tri[1]), final_id(tri[2])});
    return Tree(n, std::move(rot));
}

namespace {

void render_subtree(const Tree& t, int v, int parent, std::string& out) {
    if (t.is_leaf(v)) {
        out += std::to_string(v);
        return;
    }
    const auto& rot = t.rotation(v);
    int k = 0;
    while (rot[static_cast<size_t>(k)] != parent) ++k;
    out += '(';
    render_subtree(t, rot[static_cast<size_t>((k + 1) % 3)], v, out);
    out += ',';
    render_subtree(t, rot[static_cast<size_t>((k + 2) % 3)], v, out);
    out += ')';
}

}  // namespace

std::string render(const Tree& t) {
    const int root = t.leaf_neighbor(1);
    const auto& rot = t.rotation(root);
    int k = 0;
    while (rot[static_cast<size_t>(k)] != 1) ++k;
    std::string out = "(1,";
    render_subtree(t, rot[static_cast<size_t>((k + 1) % 3)], root, out);
    out += ',';
    render_subtree(t, rot[static_cast<size_t>((k + 2) % 3)], root, out);
    out += ')';
    return out;
}

Tree caterpillar(int n) {
    if (n < 3) throw std::invalid_argument("caterpillar needs n >= 3");
    std::vector<std::array<int, 3>> rot;
    if (n == 3) {
        rot.push_back({1, 2, 3});
        return Tree(3, std::move(rot));
    }
    const int t1 = n + 1;
    rot.push_back({1, 2, t1 + 1});
    for (int i = 2; i <= n - 3; ++i) rot.push_back({t1 + i - 2, i + 1, t1 + i});
    rot.push_back({2 * n - 3, n - 1, n});
    return Tree(n, std::move(rot));
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_trees needs n >= 3");
    // Grow by attaching leaf k+1 in the middle of each edge. Trinode ids are
    // allocated n+1, n+2, ... in creation order so only the final trees are
    // valid Tree values; intermediate stages are raw rotation tables.
    struct Partial {
        std::vector<std::array<int, 3>> rot;  // trinode t = n+1+index
    };
    const int base = n + 1;
    std::vector<Partial> current{{{{1, 2, 3}}}};
    for (int k = 4; k <= n; ++k) {
        std::vector<Partial> next;
        for (const auto& p : current) {
            // Collect edges of the partial tree.
            std::set<Edge> edges;
            for (size_t i = 0; i < p.rot.size(); ++i)
                for (int nb : p.rot[i]) edges.insert(make_edge(base + static_cast<int>(i), nb));
            for (const auto& e : edges) {
                Partial q = p;
                const int fresh = base + static_cast<int>(q.rot.size());
                auto redirect = [&](int v, int from, int to) {
                    if (v < base) return;  // leaves keep their single edge implicitly
                    for (int& nb : q.rot[static_cast<size_t>(v - base)])
                        if (nb == from) nb = to;
                };
                redirect(e.first, e.second, fresh);
                redirect(e.second, e.first, fresh);
                q.rot.push_back({e.first, e.second, k});
                next.push_back(std::move(q));
            }
        }
        current = std::move(next);
    }
    std::vector<Tree> out;
    out.reserve(current.size());
    for (auto& p : current) out.emplace_back(n, std::move(p.rot));
    return out;
}

ProperSubtree span_of(const Tree& t, const std::vector<int>& leaves) {
    if (leaves.size() < 2) throw std::invalid_argument("a proper subtree needs >= 2 leaves");
    ProperSubtree s;
    s.leaves = leaves;
    std::sort(s.leaves.begin(), s.leaves.end());
    for (int l : s.leaves) {
        if (!t.is_leaf(l)) throw std::invalid_argument("not a leaf: " + std::to_string(l));
        s.leaf_mask |= 1u << (l - 1);
    }
    const size_t vc = static_cast<size_t>(t.last_trinode() + 1);
    s.in_span.assign(vc, 0);
    s.span_degree.assign(vc, 0);
    // Union of pairwise paths = union of paths from one leaf to all others.
    for (size_t i = 1; i < s.leaves.size(); ++i)
        for (int v : t.path(s.leaves[0], s.leaves[i])) s.in_span[static_cast<size_t>(v)] = 1;
    for (int v = 1; v <= t.last_trinode(); ++v) {
        if (!s.in_span[static_cast<size_t>(v)]) continue;
        for (int nb : t.neighbors(v))
            if (s.in_span[static_cast<size_t>(nb)]) {
                ++s.span_degree[static_cast<size_t>(v)];
                if (v < nb) s.span_edges.push_back({v, nb});
            }
    }
    std::sort(s.span_edges.begin(), s.span_edges.end());
    return s;
}

std::vector<ProperSubtree> proper_subtrees(const Tree& t) {
    const int n = t.leaf_count();
    std::vector<ProperSubtree> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> leaves;
        for (int l = 1; l <= n; ++l)
            if (mask & (1u << (l - 1))) leaves.push_back(l);
        out.push_back(span_of(t, leaves));
    }
    return out;
}

int path_trinode_count(const Tree& t, const ProperSubtree& s, int l1, int l2) {
    if (l1 == l2) throw std::invalid_argument("leaves must be distinct");
    for (int l : {l1, l2})
        if (!(s.leaf_mask & (1u << (l - 1))))
            throw std::invalid_argument("leaf " + std::to_string(l) + " not in subtree");
    int count = 0;
    for (int v : t.path(l1, l2))
        if (s.span_degree[static_cast<size_t>(v)] == 3) ++count;
    return count;
}

bool is_odd_subtree(const Tree& t, const ProperSubtree& s) {
    for (size_t i = 0; i < s.leaves.size(); ++i)
        for (size_t j = i + 1; j < s.leaves.size(); ++j)
            if (path_trinode_count(t, s, s.leaves[i], s.leaves[j]) % 2 == 0) return false;
    return true;
}

}  // namespace bzq
