#pragma once

#include <string>
#include <vector>

#include "equidom/graph.hpp"
#include "equidom/pseudo_graph.hpp"
#include "equidom/weights.hpp"

namespace equidom {

enum class ReductionRule { CliqueClass, StableBundle, DemandGroup, IsolatedStableClass };

const char* to_string(ReductionRule r);

// One deletion: the representative survives the rule and belongs to the same
// clique class / bundle / demand-equal group as the deleted vertex, which is
// what makes weight lifting well-defined.
struct TraceEntry {
    ReductionRule rule;
    int deleted;
    int representative;
};
using ReductionTrace = std::vector<TraceEntry>;

struct GraphReduction {
    Graph graph;
    std::vector<int> new_to_old;
    ReductionTrace trace; // ids of the input graph
};

// Trim every clique class to its r smallest members.
GraphReduction reduce_clique_classes(const Graph& g, int r);

// Trim every stable set bundle to its r smallest stable classes (a single
// surviving class degenerates into a plain stable class).
GraphReduction reduce_stable_set_bundles(const Graph& g, int r);

struct PseudoReduction {
    PseudoGraph pg;
    ReductionTrace trace;
};

// Trim every demand-equal group inside clique-bundle blocks to r elements.
// Requires every demand component <= r.
PseudoReduction reduce_pseudo_graph(const PseudoGraph& pg, int r);

enum class KernelVerdict { NotEquidominating, PseudoKernel, GraphKernel };

struct KernelOutcome {
    KernelVerdict verdict = KernelVerdict::NotEquidominating;
    std::string reason; // stable tag accompanying a negative verdict

    PseudoGraph pseudo_kernel; // elements keep the original vertex ids
    Graph graph_kernel;
    std::vector<int> kernel_new_to_old; // GraphKernel relabeling
    ReductionTrace trace;               // original vertex ids

    static KernelOutcome no(std::string why);
};

// Negative-verdict reason tags.
inline constexpr const char* kReasonStableClassTooBig = "stable class larger than target";
inline constexpr const char* kReasonTooManyPseudoClasses = "more than parameter many pseudo classes";
inline constexpr const char* kReasonDemandExceedsBound = "demand component exceeds bound";
inline constexpr const char* kReasonTwoBigClasses = "two big pseudo classes with a stable class";
inline constexpr const char* kReasonBigNonIsolatedStable = "big non-isolated stable class";
inline constexpr const char* kReasonNot1Equidominating = "not complete, edgeless or K2n-ne";

// Kernel pipeline for the fixed-target problem: refuse early on a stable
// class above t, more than t pseudo classes, or a demand component above t;
// otherwise clique classes trim to t, stable set bundles to ceil(t/2) classes,
// the pseudo graph is rebuilt and its demand groups trim to t.
KernelOutcome kernel_target_t(const Graph& g, Weight t);

// Kernel pipeline for the bounded-weight problem. k=1 is classified directly
// (only complete, edgeless and K2n-ne graphs qualify). For k>=2, a stable
// class of size >= k^2 next to another big pseudo class, or a big non-isolated
// stable class, is a definitive no; a big isolated stable class trims to k^5
// vertices (graph kernel); otherwise the target pipeline runs with bound
// k^3+k^2.
KernelOutcome kernel_k(const Graph& g, Weight k);

// Extends a structure verified on the kernel back to g: deleted vertices copy
// their representative's weight; trimming an isolated stable class raises the
// target by the representative weight per deleted vertex.
WeightStructure lift_structure(const Graph& g, const ReductionTrace& trace,
                               const std::vector<std::pair<int, Weight>>& kernel_weights,
                               Weight kernel_target);

} // namespace equidom
