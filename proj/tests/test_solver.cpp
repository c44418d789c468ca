#include <doctest.h>

#include "equidom/decide.hpp"
#include "equidom/generate.hpp"
#include "equidom/oracle.hpp"
#include "equidom/solver.hpp"
#include "helpers.hpp"

using namespace equidom;
using namespace equidom::testing;

TEST_CASE("canonical weight function counts") {
    // One clique class of two vertices: constant weight only.
    DominationInstance k2 = DominationInstance::from_graph(make_complete(2));
    CHECK(count_omega(k2, 2) == 2);

    DominationInstance single = DominationInstance::from_graph(make_complete(1));
    CHECK(count_omega(single, 3) == 3);

    // Two singleton blocks: weights must differ across blocks.
    DominationInstance p2 = DominationInstance::from_graph(make_path(3));
    REQUIRE(p2.blocks().size() == 2); // {0,2} stable class + {1}
    CHECK(count_omega(p2, 2) == 2); // the split of {0,2} would starve block {1}

    // A stable class of two vertices alone: constant or split.
    DominationInstance e2 = DominationInstance::from_graph(make_edgeless(2));
    CHECK(count_omega(e2, 2) == 3);
}

TEST_CASE("no two emitted functions are equivalent") {
    Rng rng(71);
    for (int round = 0; round < 20; ++round) {
        int n = 1 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, rng);
        DominationInstance inst = DominationInstance::from_graph(g);
        for (Weight k = 1; k <= 3; ++k) {
            std::vector<std::vector<std::pair<int, Weight>>> signatures;
            enumerate_omega(inst, k, [&](const OmegaFunction& w) {
                // Signature: per (block, weight) count, which is exactly the
                // equivalence invariant.
                std::vector<std::pair<int, Weight>> sig;
                for (const OmegaRun& r : w)
                    for (int c = 0; c < r.count; ++c) sig.emplace_back(r.block, r.weight);
                signatures.push_back(sig);
                return true;
            });
            for (size_t i = 0; i < signatures.size(); ++i)
                for (size_t j = i + 1; j < signatures.size(); ++j)
                    CHECK(signatures[i] != signatures[j]);
        }
    }
}

TEST_CASE("representative subsets") {
    DominationInstance c4 = DominationInstance::from_pseudo_graph(
        build_pseudo_graph(make_cycle(4)));
    OmegaFunction w{{0, 1, 4}}; // one block, weight 1 everywhere
    CHECK(representative_subset(c4, w, {0}).empty());
    CHECK(representative_subset(c4, w, {4}) == std::vector<int>{0, 1, 2, 3});
    std::vector<int> pair = representative_subset(c4, w, {2});
    CHECK(pair == std::vector<int>{0, 1});
    CHECK(c4.is_solution(pair));
}

TEST_CASE("greedy minimal solutions") {
    DominationInstance kn = DominationInstance::from_graph(make_complete(6));
    CHECK(find_any_minimal_solution(kn).size() == 1);

    DominationInstance f = DominationInstance::from_graph(fig1());
    std::vector<int> d = find_any_minimal_solution(f);
    CHECK(is_mds(fig1(), VertexSet::of(8, d)));

    DominationInstance c4 = DominationInstance::from_pseudo_graph(
        build_pseudo_graph(make_cycle(4)));
    CHECK(find_any_minimal_solution(c4).size() == 2);
}

TEST_CASE("bounded-weight solving on instances") {
    DominationInstance kn = DominationInstance::from_graph(make_complete(7));
    auto r = solve_k(kn, 1);
    REQUIRE(r);
    CHECK(r->target == 1);

    DominationInstance c4 = DominationInstance::from_graph(make_cycle(4));
    auto rc = solve_k(c4, 1);
    REQUIRE(rc);
    CHECK(rc->target == 2);

    DominationInstance p5 = DominationInstance::from_graph(make_path(5));
    CHECK_FALSE(solve_k(p5, 3));
}

TEST_CASE("fixed-target solving on instances") {
    DominationInstance kn = DominationInstance::from_graph(make_complete(4));
    auto r = solve_target_t(kn, 1);
    REQUIRE(r);
    CHECK(r->target == 1);

    DominationInstance p4 = DominationInstance::from_graph(make_path(4));
    auto rp = solve_target_t(p4, 3);
    REQUIRE(rp);
    WeightStructure s = to_weight_structure(*rp, 4);
    CHECK(s.weights == std::vector<Weight>{1, 1, 2, 2});
    CHECK(verify_structure(make_path(4), s));

    DominationInstance e3 = DominationInstance::from_graph(make_edgeless(3));
    CHECK_FALSE(solve_target_t(e3, 2));
}

TEST_CASE("decide composes kernel and solver") {
    Decision fig = decide_k_equidomination(fig1(), 16);
    REQUIRE(fig.yes);
    CHECK(verify_structure(fig1(), *fig.structure));

    CHECK_FALSE(decide_k_equidomination(make_path(5), 8).yes);
    Decision no = decide_target_t(make_edgeless(5), 4);
    CHECK_FALSE(no.yes);

    Decision c4 = decide_k_equidomination(make_cycle(4), 1);
    REQUIRE(c4.yes);
    CHECK(c4.structure->target == 2);

    Decision en = decide_k_equidomination(make_edgeless(6), 1);
    REQUIRE(en.yes);
    CHECK(en.structure->target == 6);
}

TEST_CASE("solver certificates respect the pseudo class weight rules") {
    Rng rng(73);
    int yes_seen = 0;
    for (int round = 0; round < 250; ++round) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, rng, 25 + static_cast<int>(rng.below(55)));
        Decision d = decide_k_equidomination(g, 3);
        if (!d.yes) continue;
        ++yes_seen;
        const WeightStructure& s = *d.structure;
        CAPTURE(serialize_graph(g));
        CHECK(verify_structure(g, s));

        TwinPartition t = twin_partition(g);
        PseudoPartition p = pseudo_class_partition(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (t.class_of[u] != t.class_of[v] && !g.adjacent(u, v))
                    CHECK(s.weights[u] != s.weights[v]); // distance >= 2 rule
                if (p.class_of[u] != p.class_of[v])
                    CHECK(s.weights[u] != s.weights[v]);
                if (p.class_of[u] == p.class_of[v] &&
                    p.classes[p.class_of[u]].kind != PseudoKind::StableClass)
                    CHECK(s.weights[u] == s.weights[v]); // constant off stable classes
            }
    }
    CHECK(yes_seen > 0);
}

TEST_CASE("equal weights across adjacent stable classes need the bundle shape") {
    // Whenever an oracle-verified structure gives vertices of two adjacent
    // stable classes one weight, both classes have two members and identical
    // closed neighborhoods.
    Rng rng(79);
    for (int round = 0; round < 150; ++round) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, rng, 25 + static_cast<int>(rng.below(55)));
        auto s = brute_force_k_equidominating(g, 2);
        if (!s) continue;
        TwinPartition t = twin_partition(g);
        for (size_t a = 0; a < t.classes.size(); ++a)
            for (size_t b = a + 1; b < t.classes.size(); ++b) {
                const TwinClass &ca = t.classes[a], &cb = t.classes[b];
                if (ca.kind != TwinKind::StableClass || cb.kind != TwinKind::StableClass)
                    continue;
                if (!g.adjacent(ca.members.front(), cb.members.front())) continue;
                bool shared = false;
                for (int u : ca.members)
                    for (int v : cb.members) shared |= s->weights[u] == s->weights[v];
                if (!shared) continue;
                CAPTURE(serialize_graph(g));
                CHECK(ca.members.size() == 2);
                CHECK(cb.members.size() == 2);
                CHECK(closed_neighborhood(g, VertexSet::of(n, ca.members)) ==
                      closed_neighborhood(g, VertexSet::of(n, cb.members)));
            }
    }
}

TEST_CASE("the worked example solves at its published parameters") {
    Decision t23 = decide_target_t(fig1(), 23);
    REQUIRE(t23.yes);
    CHECK(t23.structure->target == 23);
    CHECK(verify_structure(fig1(), *t23.structure));

    CHECK_FALSE(decide_target_t(fig1(), 2).yes);
}
