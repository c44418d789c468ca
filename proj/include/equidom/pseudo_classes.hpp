#pragma once

#include <vector>

#include "equidom/graph.hpp"
#include "equidom/twin.hpp"

namespace equidom {

enum class PseudoKind {
    Singleton,
    CliqueClass,
    StableClass,
    CliqueBundle,
    StableBundle
};

const char* to_string(PseudoKind k);
bool parse_pseudo_kind(const std::string& token, PseudoKind& out);

struct PseudoClass {
    PseudoKind kind;
    std::vector<int> members; // ascending
};

// Unique partition of V into pseudo classes: twin classes not absorbed into a
// bundle, plus the bundles themselves. Ordered by smallest member.
struct PseudoPartition {
    std::vector<PseudoClass> classes;
    std::vector<int> class_of;
};

// Decides mds-exchangeability for an adjacent pair by looking for a private
// neighbor of one endpoint that the other cannot cover: for each orientation
// (v1,v2) and each v' in N(v1)\N[v2], the pair is not exchangeable when
// {v1} u (V \ (N[v'] u {v2})) dominates. Requires x,y adjacent.
bool mds_exchangeable_adjacent(const Graph& g, int x, int y);

// Maximal unions of >= 2 stable classes of size two that pairwise see each
// other and share one external neighborhood (the induced subgraph is a
// complete multipartite graph with parts of size two).
std::vector<VertexSet> detect_stable_set_bundles(const Graph& g, const TwinPartition& t);

// Maximal unions of >= 2 clique/singleton classes whose members are pairwise
// adjacent and pairwise mds-exchangeable. Throws IntegrityError if the
// grouping is not a clean partition (cannot happen for valid inputs).
std::vector<VertexSet> detect_clique_bundles(const Graph& g, const TwinPartition& t);

PseudoPartition pseudo_class_partition(const Graph& g);

} // namespace equidom
