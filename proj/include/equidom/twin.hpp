#pragma once

#include <vector>

#include "equidom/graph.hpp"

namespace equidom {

enum class TwinKind { Singleton, CliqueClass, StableClass };

const char* to_string(TwinKind k);

struct TwinClass {
    TwinKind kind;
    std::vector<int> members; // ascending
};

// Partition of V into maximal twin classes, ordered by smallest member.
struct TwinPartition {
    std::vector<TwinClass> classes;
    std::vector<int> class_of; // vertex -> index into classes
};

// Two vertices are twins when N(v)\{w} = N(w)\{v}. Adjacent twins share the
// closed neighborhood, non-adjacent twins the open one; classes of size >= 2
// are tagged clique or stable accordingly.
TwinPartition twin_partition(const Graph& g);

// One vertex per class of P, adjacent iff the classes see each other.
// Requires P = twin_partition(g).
Graph quotient_graph(const Graph& g, const TwinPartition& p);

} // namespace equidom
