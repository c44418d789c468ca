#include <doctest.h>

#include <algorithm>

#include "equidom/generate.hpp"
#include "equidom/hereditary.hpp"
#include "equidom/oracle.hpp"
#include "equidom/solver.hpp"
#include "helpers.hpp"

using namespace equidom;
using namespace equidom::testing;

namespace {

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

bool isomorphic5(const Graph& a, const Graph& b) {
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    do {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = i + 1; j < 5 && ok; ++j)
                ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

const Graph& catalog_graph(const std::string& name) {
    for (const auto& [n, g] : forbidden_catalog())
        if (n == name) return g;
    throw std::runtime_error("no catalog entry " + name);
}

} // namespace

TEST_CASE("catalog edge lists match their textbook constructions") {
    CHECK(isomorphic5(catalog_graph("P5"), make_path(5)));
    CHECK(isomorphic5(catalog_graph("C5"), make_cycle(5)));
    CHECK(isomorphic5(catalog_graph("house"), complement(make_path(5))));
    Graph p2_p3 = disjoint_union(make_path(2), make_path(3));
    CHECK(isomorphic5(catalog_graph("co-(P2+P3)"), complement(p2_p3)));
    CHECK(catalog_graph("K2,3").edge_count() == 6);
    CHECK(catalog_graph("bull").edge_count() == 5);
    CHECK(catalog_graph("banner").edge_count() == 5);
}

TEST_CASE("basic graph recognition") {
    CHECK(is_basic(make_complete(1)));
    CHECK(is_basic(make_cycle(4)));
    CHECK(is_basic(make_k2n_minus_ne(3)));
    CHECK_FALSE(is_basic(make_complete(3)));
    CHECK_FALSE(is_basic(make_complete(2)));
    CHECK_FALSE(is_basic(make_path(4)));
}

TEST_CASE("co-chain graphs with prescribed co-classes") {
    Graph k4 = make_complete(4);
    CHECK(is_cochain_with_coclasses(k4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})));

    Graph two_k2 = disjoint_union(make_complete(2), make_complete(2));
    CHECK(is_cochain_with_coclasses(two_k2, VertexSet::of(4, {0, 1}),
                                    VertexSet::of(4, {2, 3})));

    // Crossing neighborhoods {2} and {3} are incomparable.
    Graph bad = graph_of(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    CHECK_FALSE(is_cochain_with_coclasses(bad, VertexSet::of(4, {0, 1}),
                                          VertexSet::of(4, {2, 3})));

    // Non-clique side.
    Graph nc = graph_of(4, {{2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(is_cochain_with_coclasses(nc, VertexSet::of(4, {0, 1}),
                                          VertexSet::of(4, {2, 3})));
}

TEST_CASE("forbidden members are recognized as non-hereditary") {
    for (const auto& [name, g] : forbidden_catalog()) {
        CAPTURE(name);
        CHECK_FALSE(recognize_hereditary(g).hereditary);
        auto w = forbidden_subgraph_search(g);
        REQUIRE(w);
        CHECK(w->name == name);
        CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4});
    }
}

TEST_CASE("recognition accepts the structured families") {
    CHECK(recognize_hereditary(make_k2n_minus_ne(4)).hereditary);
    CHECK(recognize_hereditary(make_complete(6)).hereditary);
    CHECK(recognize_hereditary(make_edgeless(5)).hereditary);
    CHECK(recognize_hereditary(make_path(4)).hereditary);
    CHECK_FALSE(recognize_hereditary(make_path(5)).hereditary);
    CHECK_FALSE(recognize_hereditary(make_cycle(6)).hereditary);

    // Chain-join of two squares through added apex vertices.
    auto apex_square = [] {
        return graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                            {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    };
    Graph joined = make_chain_join(apex_square(), apex_square(), {1});
    CHECK(recognize_hereditary(joined).hereditary);
}

TEST_CASE("forbidden subgraph search finds embedded members") {
    auto w = forbidden_subgraph_search(make_cycle(6));
    REQUIRE(w);
    CHECK(w->name == "P5");
    CHECK_FALSE(forbidden_subgraph_search(make_complete(4)));
    CHECK_FALSE(forbidden_subgraph_search(make_complete(5)));
}

TEST_CASE("decomposition trees reassemble the input") {
    for (const Graph& g :
         {make_k2n_minus_ne(3), make_path(4), make_complete(5),
          make_chain_join(make_complete(2), make_complete(3), {2, 1}),
          disjoint_union(make_cycle(4), make_complete(3))}) {
        HereditaryResult res = recognize_hereditary(g);
        REQUIRE(res.hereditary);
        Graph back = reassemble(*res.tree, g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("structures from the decomposition verify") {
    auto k1 = construct_structure_hereditary(make_complete(1));
    REQUIRE(k1);
    CHECK(k1->weights == std::vector<Weight>{1});
    CHECK(k1->target == 1);

    auto c4 = construct_structure_hereditary(make_cycle(4));
    REQUIRE(c4);
    CHECK(c4->weights == std::vector<Weight>{1, 1, 1, 1});
    CHECK(c4->target == 2);

    // Apex over a square: the universal vertex takes the target.
    Graph wheel = make_chain_join(make_cycle(4), make_complete(1), {});
    Graph apex = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                              {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    auto ws = construct_structure_hereditary(apex);
    REQUIRE(ws);
    CHECK(ws->weights == std::vector<Weight>{1, 1, 1, 1, 2});
    CHECK(ws->target == 2);
    CHECK(verify_structure(apex, *ws));
    CHECK_FALSE(construct_structure_hereditary(make_path(5)));
    (void)wheel;
}

TEST_CASE("recognition agrees with the forbidden oracle on random graphs") {
    Rng rng(89);
    for (int round = 0; round < 300; ++round) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng, 20 + static_cast<int>(rng.below(60)));
        CAPTURE(serialize_graph(g));
        CHECK(recognize_hereditary(g).hereditary == !forbidden_subgraph_search(g));
    }
}

TEST_CASE("hereditary recognition is closed under deleting vertices") {
    Rng rng(97);
    int kept = 0;
    for (int round = 0; round < 400 && kept < 60; ++round) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng, 20 + static_cast<int>(rng.below(60)));
        if (!recognize_hereditary(g).hereditary) continue;
        ++kept;
        int drop = static_cast<int>(rng.below(n));
        if (n == 1) continue;
        VertexSet keep = VertexSet::full(n);
        keep.erase(drop);
        Graph sub = induced_subgraph(g, keep).graph;
        CAPTURE(serialize_graph(g));
        CHECK(recognize_hereditary(sub).hereditary);
    }
    CHECK(kept > 0);
}

TEST_CASE("catalog members admit no bounded structure") {
    for (const auto& [name, g] : forbidden_catalog()) {
        CAPTURE(name);
        DominationInstance inst = DominationInstance::from_graph(g);
        for (Weight k = 1; k <= 8; ++k) CHECK_FALSE(solve_k(inst, k));
        for (int k = 1; k <= 3; ++k) CHECK_FALSE(brute_force_k_equidominating(g, k));
    }
}
