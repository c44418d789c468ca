#pragma once

#include <optional>
#include <string>

#include "equidom/graph.hpp"
#include "equidom/weights.hpp"

namespace equidom {

struct Decision {
    bool yes = false;
    std::string reason;                       // tag accompanying a no
    std::optional<WeightStructure> structure; // certificate on the input graph
};

// Kernelize, solve on the kernel, lift the structure back through the trace.
Decision decide_k_equidomination(const Graph& g, Weight k);
Decision decide_target_t(const Graph& g, Weight t);

} // namespace equidom
