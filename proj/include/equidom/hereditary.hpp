#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equidom/graph.hpp"
#include "equidom/weights.hpp"

namespace equidom {

// Basic building blocks of the decomposition: K1 and the complete multipartite
// graphs K_{2n}-ne with parts of size two (n >= 2). Recognized by degrees:
// n = 1, or n >= 4 even with every degree n-2.
bool is_basic(const Graph& g);

// H restricted to X u Y (a partition of V(H)) is a co-chain graph with the
// prescribed co-classes: X and Y are cliques and the cross-neighborhoods are
// comparable under inclusion.
bool is_cochain_with_coclasses(const Graph& h, const VertexSet& x, const VertexSet& y);

struct DecompNode {
    enum class Kind { Basic, Universal, ChainJoin, Split };
    Kind kind;
    std::vector<int> vertices; // everything below this node, ascending

    // Basic: the non-edges (partner pairs) of a K_{2n}-ne leaf, empty for K1.
    std::vector<std::pair<int, int>> basic_nonedges;

    int universal = -1; // Universal

    // ChainJoin: universal cliques on either side plus the connecting chain.
    std::vector<int> left_clique, right_clique;
    std::vector<std::pair<int, int>> cross_edges;

    std::vector<std::unique_ptr<DecompNode>> children;
};

struct HereditaryResult {
    bool hereditary = false;
    std::unique_ptr<DecompNode> tree; // present iff hereditary
};

// Decomposition-based recognition of hereditarily equidominating graphs:
// peel basic components, universal vertices and chain-joins, component by
// component. O(n(n+m)).
HereditaryResult recognize_hereditary(const Graph& g);

// Rebuilds the graph encoded by a decomposition tree (for validating trees).
Graph reassemble(const DecompNode& node, int vertex_count);

struct ForbiddenWitness {
    std::string name;
    std::vector<int> vertices; // ascending, 5 of them
};

// The seven five-vertex obstructions, in catalog order:
// P5, C5, bull, banner, house, K2,3, co-(P2+P3).
const std::vector<std::pair<std::string, Graph>>& forbidden_catalog();

// First five-subset (lexicographic) inducing a catalog member.
std::optional<ForbiddenWitness> forbidden_subgraph_search(const Graph& g);

// Folds a successful decomposition into an equidominating structure: basic
// leaves weigh 1 throughout (target 1 for K1, else 2), a universal vertex
// takes the current target, and a chain-join rescales the second side by
// one plus the first side's total weight.
std::optional<WeightStructure> construct_structure_hereditary(const Graph& g);
WeightStructure fold_structure(const DecompNode& node, int vertex_count);

} // namespace equidom
