#pragma once

#include <optional>
#include <vector>

#include "equidom/graph.hpp"
#include "equidom/weights.hpp"

namespace equidom {

// Hard limits for the exhaustive oracles. Exceeding a cap raises BudgetError;
// the oracles never degrade silently. EQUIDOM_BUDGET="<max_n>[:<max_ops>]"
// overrides the defaults.
struct OracleBudget {
    int max_n = 25;
    double max_brute_ops = 1e8; // bound on k^n * 2^n for structure sweeps

    static OracleBudget from_env();
};

// All minimal dominating sets, lexicographically ordered as ascending vertex
// sequences. Ground truth via a full 2^n sweep.
std::vector<VertexSet> enumerate_mds(const Graph& g,
                                     const OracleBudget& budget = OracleBudget::from_env());

// Both directions of the defining equivalence: every mds weighs target, and
// every subset of weight exactly target is an mds (found by depth-first
// search over descending weights with suffix-sum pruning).
bool verify_structure(const Graph& g, const WeightStructure& s,
                      const OracleBudget& budget = OracleBudget::from_env());

// First weight function w : V -> [k] in lexicographic order that forms an
// equidominating structure, with the target taken from the lexicographically
// first mds. Absence means the graph is not k-equidominating.
std::optional<WeightStructure> brute_force_k_equidominating(
    const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

// Same sweep restricted to structures with the given target value.
std::optional<WeightStructure> brute_force_target_t(
    const Graph& g, Weight t, const OracleBudget& budget = OracleBudget::from_env());

// Definitional mds-exchangeability from the full mds list: some mds contains
// exactly one of x,y, and every such mds swaps into another mds.
bool mds_exchangeable_bruteforce(const Graph& g, int x, int y,
                                 const OracleBudget& budget = OracleBudget::from_env());

} // namespace equidom
