#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equidom {

using Weight = long long;

// Positive vertex weights plus a target value: a subset is a solution exactly
// when its total weight hits the target.
struct WeightStructure {
    std::vector<Weight> weights; // indexed by vertex id
    Weight target = 0;

    Weight total(const std::vector<int>& ids) const {
        Weight s = 0;
        for (int v : ids) s += weights[v];
        return s;
    }
};

// Text format: one "<vertex-id> <weight>" line per vertex (1-based ids),
// final line "t <value>".
std::string serialize_weight_structure(const WeightStructure& s);
WeightStructure parse_weight_structure(std::istream& in, int vertex_count);
WeightStructure parse_weight_structure(const std::string& text, int vertex_count);

} // namespace equidom
