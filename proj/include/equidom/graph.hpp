#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "equidom/vertex_set.hpp"

namespace equidom {

// Simple undirected graph on vertex ids 0..n-1. No self-loops, no parallel
// edges. Immutable once constructed; safe to share between threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    // Open neighborhood N(v) as a bitset.
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    // Sorted adjacency list, for O(deg) traversals.
    const std::vector<int>& neighbor_list(int v) const { return nbrs_[v]; }

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<int>> nbrs_;
};

// N[v] = N(v) u {v}.
VertexSet closed_neighborhood(const Graph& g, int v);

// N[S] = union of closed neighborhoods over S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// pn[v,S] = N[v] \ N[S \ {v}]. Requires v in S.
VertexSet private_neighbors(const Graph& g, int v, const VertexSet& s);

// D dominates iff N[D] = V.
bool is_dominating(const Graph& g, const VertexSet& d);

// Minimal dominating set: dominating and every member keeps a private
// neighbor.
bool is_mds(const Graph& g, const VertexSet& d);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for vertices outside W
    std::vector<int> new_to_old;
};

// Subgraph induced by non-empty W, vertices relabeled order-preservingly.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

// Reads the edge-list format: '#' comment lines, one "p <n> <m>" header, then
// m lines "e <u> <v>" with 1-based endpoints. Duplicate edges collapse;
// self-loops and out-of-range ids are errors naming the line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Emits the same format, edges as "e u v" with u < v, ascending.
std::string serialize_graph(const Graph& g);

} // namespace equidom
