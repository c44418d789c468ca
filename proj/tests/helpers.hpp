#pragma once

#include <utility>
#include <vector>

#include "equidom/generate.hpp"
#include "equidom/graph.hpp"
#include "equidom/weights.hpp"

namespace equidom::testing {

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::vector<std::pair<int, int>>(edges));
}

// The worked 8-vertex example: a=0 b=1 c1=2 c2=3 d=4 e=5 s1=6 s2=7.
// Equidominating with weights (16,7,3,3,4,3,11,5) and target 23.
inline Graph fig1() {
    return graph_of(8, {{0, 6}, {0, 7}, {0, 2}, {0, 3}, {0, 1}, {2, 3},
                        {2, 5}, {3, 5}, {1, 2}, {1, 3}, {1, 5}, {1, 4}});
}

inline std::vector<Weight> fig1_weights() { return {16, 7, 3, 3, 4, 3, 11, 5}; }

// Triangle {0,1,2} with a pendant 3 on 0.
inline Graph paw() { return graph_of(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// Two clique bundles of three clique classes each (sizes 3,2,4 and 2,2,4),
// all classes inside a bundle seeing each other, plus two class-level cross
// edges between the bundles.
inline Graph fig3() {
    std::vector<std::vector<int>> cls = {
        {0, 1, 2}, {3, 4}, {5, 6, 7, 8},      // bundle one
        {9, 10}, {11, 12}, {13, 14, 15, 16}}; // bundle two
    std::vector<std::pair<int, int>> edges;
    auto join = [&](int a, int b) {
        for (int u : cls[a])
            for (int v : cls[b]) edges.emplace_back(u, v);
    };
    for (int c = 0; c < 6; ++c)
        for (size_t i = 0; i < cls[c].size(); ++i)
            for (size_t j = i + 1; j < cls[c].size(); ++j)
                edges.emplace_back(cls[c][i], cls[c][j]);
    join(0, 1); join(0, 2); join(1, 2);
    join(3, 4); join(3, 5); join(4, 5);
    join(1, 3); join(2, 4);
    return Graph(17, edges);
}

// All 2^(n(n-1)/2) labeled graphs on n vertices, by edge mask.
inline Graph labeled_graph(int n, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph random_graph(int n, Rng& rng, int percent = 50) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < percent) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Two clique bundles {p1, a_1..a_m} and {p2, b_1..b_m}: both sides complete,
// a_i adjacent to b_j exactly when i != j. The a_i form one demand-equal
// group of m elements with demand 3 against the other bundle, so the
// demand-group rule bites for m > t >= 3.
inline Graph double_bundle(int m) {
    int p1 = 0, p2 = m + 1;
    auto a = [&](int i) { return 1 + i; };
    auto b = [&](int i) { return m + 2 + i; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(m + 1 + i, m + 1 + j);
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) edges.emplace_back(a(i), b(j));
    (void)p1;
    (void)p2;
    return Graph(2 * m + 2, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

} // namespace equidom::testing
