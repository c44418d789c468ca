#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "equidom/graph.hpp"
#include "equidom/pseudo_graph.hpp"
#include "equidom/weights.hpp"

namespace equidom {

// One block of the search instance, elements listed in canonical order
// (demand-equal groups by smallest member, ids ascending inside a group).
// Only stable set classes may receive more than one weight value: every
// other kind is pairwise exchangeable, forcing a constant weight.
struct SolveBlock {
    PseudoKind kind;
    std::vector<int> canonical;
    bool multi_weight;
};

// Uniform view the exhaustive solver runs on. Wraps either a graph (solution
// predicate: minimal dominating set) or a pseudo graph (minimal dense set).
// Elements of one block are interchangeable in any solution, so solution
// status is a function of the per-block selection counts; a lookup table
// over count vectors backs the hot path when small enough.
class DominationInstance {
public:
    static DominationInstance from_graph(const Graph& g);
    static DominationInstance from_graph(const Graph& g, const PseudoPartition& p);
    static DominationInstance from_pseudo_graph(const PseudoGraph& pg);

    const std::vector<SolveBlock>& blocks() const { return blocks_; }
    const std::vector<int>& elements() const { return elements_; } // ascending ids
    int element_count() const { return static_cast<int>(elements_.size()); }
    int block_of(int id) const;

    // Monotone feasibility (dominating / dense) and exact solution test.
    bool is_feasible(const std::vector<int>& ids) const;
    bool is_solution(const std::vector<int>& ids) const;
    bool is_solution_counts(const std::vector<int>& block_counts) const;

    // Count-c representative: the c smallest ids of each block.
    std::vector<int> representative_for_counts(const std::vector<int>& block_counts) const;

private:
    void finish_setup();

    std::optional<Graph> graph_;
    std::optional<PseudoGraph> pseudo_;
    std::vector<SolveBlock> blocks_;
    std::vector<int> elements_;
    std::vector<int> block_of_; // by id, -1 when absent

    std::vector<char> table_; // solution status by mixed-radix count vector
    std::vector<long long> radix_;
    bool has_table_ = false;
};

// A weight function from the canonical family: consecutive runs along the
// canonical element order, one weight value per run, values disjoint across
// blocks, ascending within a block.
struct OmegaRun {
    int block;
    Weight weight;
    int count;
};
using OmegaFunction = std::vector<OmegaRun>;

// Visits one representative per equivalence class of weight functions
// V -> [k] (two functions are equivalent when every weight value hits each
// block with the same multiplicity). Return false from the visitor to stop.
void enumerate_omega(const DominationInstance& inst, Weight k,
                     const std::function<bool(const OmegaFunction&)>& visit);

long long count_omega(const DominationInstance& inst, Weight k);

// For each weight value, the x_i smallest-id elements of its preimage.
std::vector<int> representative_subset(const DominationInstance& inst,
                                       const OmegaFunction& w,
                                       const std::vector<int>& x);

// Greedy minimal solution: start from the whole universe and drop elements in
// descending id order while feasibility survives.
std::vector<int> find_any_minimal_solution(const DominationInstance& inst);

// Structure found on an instance; weights keyed by element id.
struct SolveResult {
    std::vector<std::pair<int, Weight>> weights; // ascending by id
    Weight target = 0;
};

// Exhaustive decision for bounded weights: sweep the canonical weight
// functions, fix the target from one minimal solution, and accept a function
// iff subsets hit the target exactly when they are solutions.
std::optional<SolveResult> solve_k(const DominationInstance& inst, Weight k);

// Same sweep with k := t, keeping only weight functions whose fixed minimal
// solution weighs exactly t.
std::optional<SolveResult> solve_target_t(const DominationInstance& inst, Weight t);

// Dense WeightStructure over vertex ids 0..n-1 (ids must cover the range).
WeightStructure to_weight_structure(const SolveResult& r, int n);

} // namespace equidom
