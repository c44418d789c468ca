#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "equidom/graph.hpp"
#include "equidom/pseudo_classes.hpp"

namespace equidom {

// Per-element demand vector: component i is the least number of elements of
// block i that dominate the element from that block alone (0 when block i
// cannot do it on its own).
using DemandVector = std::vector<int>;

struct PseudoBlock {
    PseudoKind kind;
    std::vector<int> members; // element ids, ascending
};

// Abstraction of a graph for kernelized solving: an element set, a block
// partition, and a demand vector per element. Elements keep the ids of the
// graph they came from, so kernels remain addressable after reductions.
struct PseudoGraph {
    std::vector<int> elements; // ascending ids
    std::vector<PseudoBlock> blocks;
    std::vector<DemandVector> demands; // aligned with elements

    // Secondary partition of each block into demand-equal groups, ordered by
    // smallest member. Trivial (one group) except inside clique bundles.
    std::vector<std::vector<std::vector<int>>> groups;

    int element_index(int id) const; // -1 when absent
    int block_of(int id) const;      // -1 when absent
    void rebuild_groups();
    void check_invariants() const; // throws IntegrityError
};

// Demand of v against block i of P (P must be pseudo_class_partition(g)).
// Own block: 1 for singleton/clique/clique-bundle, 2 for stable bundle,
// |P_i| for a stable class. Foreign non-bundle block: 1 if seen, else 0.
// Foreign clique bundle: |P_i \ N[v]| + 1 when some mds can dominate v from
// inside the bundle (tested via (V \ N[v]) u P_i dominating), else 0.
DemandVector demand_vector(const Graph& g, const PseudoPartition& p, int v);

PseudoGraph build_pseudo_graph(const Graph& g);
PseudoGraph build_pseudo_graph(const Graph& g, const PseudoPartition& p);

// X is dense when every element finds a block whose demand it meets:
// some i with 0 < demand_i <= |X n block_i|.
bool is_dense(const PseudoGraph& pg, const std::vector<int>& x);
bool is_minimal_dense(const PseudoGraph& pg, const std::vector<int>& x);

// Count-based variants; counts[i] = |X n block_i|. Dense-ness depends on the
// counts only, which is what makes representative subsets sound.
bool is_dense_counts(const PseudoGraph& pg, const std::vector<int>& counts);
bool is_minimal_dense_counts(const PseudoGraph& pg, const std::vector<int>& counts);

// Text format: "pg <|V|> <s>", then one "b <kind> <ids...>" per block and one
// "m <id> <s components...>" per element, ids 1-based. Round-trips exactly.
std::string serialize_pseudo_graph(const PseudoGraph& pg);
PseudoGraph parse_pseudo_graph(std::istream& in);
PseudoGraph parse_pseudo_graph(const std::string& text);

} // namespace equidom
