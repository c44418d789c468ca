#include "equidom/hereditary.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "equidom/errors.hpp"

namespace equidom {

bool is_basic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return true;
    if (n < 4 || n % 2 != 0) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 2) return false;
    return true;
}

bool is_cochain_with_coclasses(const Graph& h, const VertexSet& x, const VertexSet& y) {
    for (int u : x)
        for (int v : x)
            if (u < v && !h.adjacent(u, v)) return false;
    for (int u : y)
        for (int v : y)
            if (u < v && !h.adjacent(u, v)) return false;
    std::vector<std::pair<int, int>> order; // (-cross degree, vertex)
    for (int u : x) {
        VertexSet cross = h.neighbors(u);
        cross &= y;
        order.emplace_back(-cross.size(), u);
    }
    std::sort(order.begin(), order.end());
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        VertexSet a = h.neighbors(order[i].second);
        a &= y;
        VertexSet b = h.neighbors(order[i + 1].second);
        b &= y;
        if (!b.is_subset_of(a)) return false;
    }
    return true;
}

namespace {

// Scratch shared across the whole recognition run; per-component work is
// proportional to the component's vertex and (global) incident edge count.
struct Recognizer {
    const Graph& g;
    std::vector<int> stamp;
    int epoch = 0;
    std::vector<int> deg;  // degree within the current component
    std::vector<int> tag;  // auxiliary marker
    int tag_epoch = 0;

    explicit Recognizer(const Graph& graph)
        : g(graph), stamp(graph.vertex_count(), 0), deg(graph.vertex_count(), 0),
          tag(graph.vertex_count(), 0) {}

    void activate(const std::vector<int>& verts) {
        ++epoch;
        for (int v : verts) stamp[v] = epoch;
    }
    bool active(int v) const { return stamp[v] == epoch; }

    void mark(const std::vector<int>& verts) {
        ++tag_epoch;
        for (int v : verts) tag[v] = tag_epoch;
    }
    bool marked(int v) const { return tag[v] == tag_epoch; }

    std::vector<std::vector<int>> components(const std::vector<int>& verts) {
        activate(verts);
        std::vector<std::vector<int>> comps;
        ++tag_epoch;
        for (int root : verts) {
            if (tag[root] == tag_epoch) continue;
            std::vector<int> comp{root};
            tag[root] = tag_epoch;
            for (size_t head = 0; head < comp.size(); ++head)
                for (int u : g.neighbor_list(comp[head]))
                    if (stamp[u] == epoch && tag[u] != tag_epoch) {
                        tag[u] = tag_epoch;
                        comp.push_back(u);
                    }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    }

    std::unique_ptr<DecompNode> make_split(std::vector<std::unique_ptr<DecompNode>> kids) {
        if (kids.size() == 1) return std::move(kids.front());
        auto node = std::make_unique<DecompNode>();
        node->kind = DecompNode::Kind::Split;
        for (auto& k : kids) {
            node->vertices.insert(node->vertices.end(), k->vertices.begin(),
                                  k->vertices.end());
            node->children.push_back(std::move(k));
        }
        std::sort(node->vertices.begin(), node->vertices.end());
        return node;
    }

    std::unique_ptr<DecompNode> forest(const std::vector<int>& verts) {
        std::vector<std::unique_ptr<DecompNode>> kids;
        for (auto& comp : components(verts)) {
            auto child = component(comp);
            if (!child) return nullptr;
            kids.push_back(std::move(child));
        }
        return make_split(std::move(kids));
    }

    // List-based co-chain test with prescribed co-classes, so the per-step
    // cost stays proportional to the incident edges rather than n.
    bool cochain(const std::vector<int>& xp, const std::vector<int>& yp) {
        mark(xp);
        for (int u : xp) {
            int inside = 0;
            for (int w : g.neighbor_list(u)) inside += marked(w);
            if (inside != static_cast<int>(xp.size()) - 1) return false;
        }
        mark(yp);
        for (int u : yp) {
            int inside = 0;
            for (int w : g.neighbor_list(u)) inside += marked(w);
            if (inside != static_cast<int>(yp.size()) - 1) return false;
        }
        std::vector<std::pair<int, int>> order; // (-cross degree, vertex)
        for (int u : xp) {
            int cross = 0;
            for (int w : g.neighbor_list(u)) cross += marked(w);
            order.emplace_back(-cross, u);
        }
        std::sort(order.begin(), order.end());
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            // The next neighborhood must nest inside the previous one.
            std::vector<int> bigger;
            mark(yp);
            for (int w : g.neighbor_list(order[i].second))
                if (marked(w)) bigger.push_back(w);
            mark(bigger);
            for (int w : g.neighbor_list(order[i + 1].second))
                if (tag[w] != tag_epoch && std::binary_search(yp.begin(), yp.end(), w))
                    return false;
        }
        return true;
    }

    // Wraps component nodes in a chain of universal vertices (one side of a
    // chain-join).
    std::unique_ptr<DecompNode> side(const std::vector<int>& clique,
                                     const std::vector<int>& inner) {
        std::vector<std::unique_ptr<DecompNode>> kids;
        if (!inner.empty()) {
            for (auto& comp : components(inner)) {
                auto child = component(comp);
                if (!child) return nullptr;
                kids.push_back(std::move(child));
            }
        }
        for (auto it = clique.rbegin(); it != clique.rend(); ++it) {
            auto node = std::make_unique<DecompNode>();
            node->kind = DecompNode::Kind::Universal;
            node->universal = *it;
            node->vertices.push_back(*it);
            for (auto& k : kids) {
                node->vertices.insert(node->vertices.end(), k->vertices.begin(),
                                      k->vertices.end());
                node->children.push_back(std::move(k));
            }
            std::sort(node->vertices.begin(), node->vertices.end());
            kids.clear();
            kids.push_back(std::move(node));
        }
        return make_split(std::move(kids));
    }

    // One iteration of the decomposition on a connected vertex set; null when
    // no decomposition step applies (the graph is not hereditarily
    // equidominating).
    std::unique_ptr<DecompNode> component(const std::vector<int>& hs) {
        int nh = static_cast<int>(hs.size());
        activate(hs);
        for (int v : hs) {
            int d = 0;
            for (int u : g.neighbor_list(v)) d += active(u);
            deg[v] = d;
        }

        bool basic = nh == 1;
        if (nh >= 4 && nh % 2 == 0) {
            basic = true;
            for (int v : hs) basic &= deg[v] == nh - 2;
        }
        if (basic) {
            auto node = std::make_unique<DecompNode>();
            node->kind = DecompNode::Kind::Basic;
            node->vertices = hs;
            if (nh > 1) {
                // The unique non-neighbor of each vertex is its partner.
                for (int v : hs) {
                    mark(g.neighbor_list(v));
                    for (int u : hs)
                        if (u > v && u != v && !marked(u))
                            node->basic_nonedges.emplace_back(v, u);
                }
            }
            return node;
        }

        for (int v : hs) {
            if (deg[v] != nh - 1) continue;
            std::vector<int> rest;
            rest.reserve(nh - 1);
            for (int u : hs)
                if (u != v) rest.push_back(u);
            auto node = std::make_unique<DecompNode>();
            node->kind = DecompNode::Kind::Universal;
            node->universal = v;
            node->vertices = hs;
            for (auto& comp : components(rest)) {
                auto child = component(comp);
                if (!child) return nullptr;
                node->children.push_back(std::move(child));
            }
            return node;
        }

        // Chain-join probe around a maximum-degree vertex and the dominant
        // neighbor of one of its non-neighbors.
        activate(hs);
        int x = -1;
        for (int v : hs)
            if (x < 0 || deg[v] > deg[x]) x = v;
        mark(g.neighbor_list(x));
        int v_out = -1;
        for (int u : hs)
            if (u != x && !marked(u)) {
                v_out = u;
                break;
            }
        int y = -1;
        for (int u : g.neighbor_list(v_out))
            if (active(u) && (y < 0 || deg[u] > deg[y])) y = u;

        std::vector<int> xs, ys, ss;
        mark(g.neighbor_list(y)); // tag = N(y)
        bool y_adj_x = false;
        for (int u : g.neighbor_list(x))
            if (active(u)) {
                if (u == y) y_adj_x = true;
                if (!marked(u) && u != y) xs.push_back(u);
            }
        for (int u : g.neighbor_list(y))
            if (active(u) && u != x) {
                // u in N(y); in S when adjacent to (or equal to) x
                bool in_nx = g.adjacent(u, x);
                if (!in_nx) ys.push_back(u);
            }
        // S = N[x] n N[y]
        for (int u : g.neighbor_list(x))
            if (active(u) && u != y && g.adjacent(u, y)) ss.push_back(u);
        if (y_adj_x) {
            ss.push_back(x);
            ss.push_back(y);
        }

        if (xs.empty() || ys.empty()) return nullptr;
        if (xs.size() + ys.size() + ss.size() != static_cast<size_t>(nh))
            return nullptr; // {x,y} does not dominate the component

        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        std::sort(ss.begin(), ss.end());

        std::vector<int> xprime, yprime;
        mark(xs);
        for (int u : ss) {
            bool hits_x = false;
            for (int w : g.neighbor_list(u))
                if (marked(w)) {
                    hits_x = true;
                    break;
                }
            (hits_x ? xprime : yprime).push_back(u);
        }

        if (!cochain(xprime, yprime)) return nullptr;

        // Universality conditions: X' sees all of X and none of Y, and
        // symmetrically for Y'.
        mark(xs);
        for (int u : xprime) {
            int seen = 0;
            for (int w : g.neighbor_list(u)) seen += marked(w);
            if (seen != static_cast<int>(xs.size())) return nullptr;
        }
        for (int u : yprime)
            for (int w : g.neighbor_list(u))
                if (marked(w)) return nullptr;
        mark(ys);
        for (int u : yprime) {
            int seen = 0;
            for (int w : g.neighbor_list(u)) seen += marked(w);
            if (seen != static_cast<int>(ys.size())) return nullptr;
        }
        for (int u : xprime)
            for (int w : g.neighbor_list(u))
                if (marked(w)) return nullptr;
        // No edge may cross between X and Y directly, otherwise removing the
        // chain edges does not separate the two sides.
        for (int u : xs)
            for (int w : g.neighbor_list(u))
                if (marked(w)) return nullptr;

        auto node = std::make_unique<DecompNode>();
        node->kind = DecompNode::Kind::ChainJoin;
        node->vertices = hs;
        node->left_clique = xprime;
        node->right_clique = yprime;
        mark(yprime);
        for (int u : xprime)
            for (int w : g.neighbor_list(u))
                if (marked(w)) node->cross_edges.emplace_back(u, w);
        std::sort(node->cross_edges.begin(), node->cross_edges.end());

        auto left = side(xprime, xs);
        if (!left) return nullptr;
        auto right = side(yprime, ys);
        if (!right) return nullptr;
        node->children.push_back(std::move(left));
        node->children.push_back(std::move(right));
        return node;
    }
};

} // namespace

HereditaryResult recognize_hereditary(const Graph& g) {
    HereditaryResult res;
    if (g.vertex_count() == 0) return res;
    Recognizer rec(g);
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    auto tree = rec.forest(all);
    res.hereditary = tree != nullptr;
    res.tree = std::move(tree);
    return res;
}

Graph reassemble(const DecompNode& node, int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    auto walk = [&](auto&& self, const DecompNode& nd) -> void {
        switch (nd.kind) {
            case DecompNode::Kind::Basic: {
                auto skipped = [&](int u, int v) {
                    for (auto ne : nd.basic_nonedges) {
                        auto [a, b] = std::minmax(ne.first, ne.second);
                        if (a == u && b == v) return true;
                    }
                    return false;
                };
                for (size_t i = 0; i < nd.vertices.size(); ++i)
                    for (size_t j = i + 1; j < nd.vertices.size(); ++j)
                        if (!skipped(nd.vertices[i], nd.vertices[j]))
                            edges.emplace_back(nd.vertices[i], nd.vertices[j]);
                break;
            }
            case DecompNode::Kind::Universal:
                for (const auto& c : nd.children) {
                    for (int u : c->vertices) edges.emplace_back(nd.universal, u);
                    self(self, *c);
                }
                break;
            case DecompNode::Kind::ChainJoin:
                for (auto e : nd.cross_edges) edges.push_back(e);
                for (const auto& c : nd.children) self(self, *c);
                break;
            case DecompNode::Kind::Split:
                for (const auto& c : nd.children) self(self, *c);
                break;
        }
    };
    walk(walk, node);
    return Graph(vertex_count, edges);
}

namespace {

Graph make_catalog(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::vector<std::pair<int, int>>(edges));
}

} // namespace

const std::vector<std::pair<std::string, Graph>>& forbidden_catalog() {
    static const std::vector<std::pair<std::string, Graph>> catalog = {
        {"P5", make_catalog(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})},
        {"C5", make_catalog(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
        {"bull", make_catalog(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}})},
        {"banner", make_catalog(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}})},
        {"house", make_catalog(5, {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 3}, {3, 4}})},
        {"K2,3", make_catalog(5, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}, {3, 4}})},
        {"co-(P2+P3)",
         make_catalog(5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})},
    };
    return catalog;
}

namespace {

// Bit index of pair (i,j), i<j, within the 10 unordered pairs of {0..4}.
constexpr int pair_bit(int i, int j) {
    int bit = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            if (a == i && b == j) return bit;
            ++bit;
        }
    return -1;
}

int catalog_mask(const Graph& g, const std::array<int, 5>& perm) {
    int mask = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (g.adjacent(perm[i], perm[j])) mask |= 1 << pair_bit(i, j);
    return mask;
}

// member_of[mask] = catalog index inducing that labeled 5-vertex graph, or -1.
const std::array<signed char, 1024>& forbidden_mask_table() {
    static const std::array<signed char, 1024> table = [] {
        std::array<signed char, 1024> t;
        t.fill(-1);
        const auto& catalog = forbidden_catalog();
        for (size_t c = 0; c < catalog.size(); ++c) {
            std::array<int, 5> perm{0, 1, 2, 3, 4};
            do {
                t[catalog_mask(catalog[c].second, perm)] = static_cast<signed char>(c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return t;
    }();
    return table;
}

} // namespace

std::optional<ForbiddenWitness> forbidden_subgraph_search(const Graph& g) {
    int n = g.vertex_count();
    if (n < 5) return std::nullopt;
    const auto& table = forbidden_mask_table();
    std::array<int, 5> pick{};
    auto search = [&](auto&& self, int depth, int from) -> std::optional<ForbiddenWitness> {
        if (depth == 5) {
            int mask = 0;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (g.adjacent(pick[i], pick[j])) mask |= 1 << pair_bit(i, j);
            int c = table[mask];
            if (c < 0) return std::nullopt;
            return ForbiddenWitness{forbidden_catalog()[c].first,
                                    {pick.begin(), pick.end()}};
        }
        for (int v = from; v <= n - (5 - depth); ++v) {
            pick[depth] = v;
            if (auto w = self(self, depth + 1, v + 1)) return w;
        }
        return std::nullopt;
    };
    return search(search, 0, 0);
}

WeightStructure fold_structure(const DecompNode& node, int vertex_count) {
    WeightStructure s;
    s.weights.assign(vertex_count, 0);

    // A disjoint union is an iterated chain-join with an empty chain: each
    // further part is rescaled by one plus the weight folded so far.
    auto disjoint_fold = [&](auto&& fold_one,
                             const std::vector<std::unique_ptr<DecompNode>>& parts) -> Weight {
        Weight t = 0;
        Weight accumulated = 0;
        bool first = true;
        for (const auto& part : parts) {
            Weight tp = fold_one(fold_one, *part);
            if (first) {
                t = tp;
                first = false;
            } else {
                Weight scale = 1 + accumulated;
                for (int v : part->vertices) s.weights[v] *= scale;
                t += scale * tp;
            }
            for (int v : part->vertices) accumulated += s.weights[v];
        }
        return t;
    };

    auto fold = [&](auto&& self, const DecompNode& nd) -> Weight {
        switch (nd.kind) {
            case DecompNode::Kind::Basic:
                for (int v : nd.vertices) s.weights[v] = 1;
                return nd.vertices.size() == 1 ? 1 : 2;
            case DecompNode::Kind::Universal: {
                if (nd.children.empty())
                    throw IntegrityError("universal node without children");
                Weight t = disjoint_fold(self, nd.children);
                s.weights[nd.universal] = t;
                return t;
            }
            case DecompNode::Kind::Split:
                return disjoint_fold(self, nd.children);
            case DecompNode::Kind::ChainJoin: {
                Weight t1 = self(self, *nd.children[0]);
                Weight scale = 1;
                for (int v : nd.children[0]->vertices) scale += s.weights[v];
                Weight t2 = self(self, *nd.children[1]);
                for (int v : nd.children[1]->vertices) s.weights[v] *= scale;
                return t1 + scale * t2;
            }
        }
        return 0;
    };
    s.target = fold(fold, node);
    return s;
}

std::optional<WeightStructure> construct_structure_hereditary(const Graph& g) {
    HereditaryResult res = recognize_hereditary(g);
    if (!res.hereditary) return std::nullopt;
    return fold_structure(*res.tree, g.vertex_count());
}

} // namespace equidom
