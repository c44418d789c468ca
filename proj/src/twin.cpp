#include "equidom/twin.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace equidom {

const char* to_string(TwinKind k) {
    switch (k) {
        case TwinKind::Singleton: return "singleton";
        case TwinKind::CliqueClass: return "clique_class";
        case TwinKind::StableClass: return "stable_class";
    }
    return "?";
}

TwinPartition twin_partition(const Graph& g) {
    int n = g.vertex_count();
    // True twins share N[v], false twins share N(v). A vertex cannot be in a
    // nontrivial group of both kinds at once, so two grouping passes suffice.
    std::map<std::vector<std::uint64_t>, std::vector<int>> by_closed, by_open;
    for (int v = 0; v < n; ++v) {
        by_open[g.neighbors(v).words()].push_back(v);
        by_closed[closed_neighborhood(g, v).words()].push_back(v);
    }
    std::vector<int> class_of(n, -1);
    std::vector<TwinClass> classes;
    auto emit = [&](const std::vector<int>& members, TwinKind kind) {
        for (int v : members) class_of[v] = static_cast<int>(classes.size());
        classes.push_back({kind, members});
    };
    for (auto& [key, members] : by_closed)
        if (members.size() >= 2) emit(members, TwinKind::CliqueClass);
    for (auto& [key, members] : by_open)
        if (members.size() >= 2 && class_of[members.front()] < 0)
            emit(members, TwinKind::StableClass);
    for (int v = 0; v < n; ++v)
        if (class_of[v] < 0) emit({v}, TwinKind::Singleton);

    std::sort(classes.begin(), classes.end(),
              [](const TwinClass& a, const TwinClass& b) {
                  return a.members.front() < b.members.front();
              });
    TwinPartition p;
    p.classes = std::move(classes);
    p.class_of.assign(n, -1);
    for (size_t i = 0; i < p.classes.size(); ++i)
        for (int v : p.classes[i].members)
            p.class_of[v] = static_cast<int>(i);
    return p;
}

Graph quotient_graph(const Graph& g, const TwinPartition& p) {
    int s = static_cast<int>(p.classes.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (g.adjacent(p.classes[i].members.front(), p.classes[j].members.front()))
                edges.emplace_back(i, j);
    return Graph(s, edges);
}

} // namespace equidom
