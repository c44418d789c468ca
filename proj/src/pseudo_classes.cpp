#include "equidom/pseudo_classes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "equidom/errors.hpp"

namespace equidom {

const char* to_string(PseudoKind k) {
    switch (k) {
        case PseudoKind::Singleton: return "singleton";
        case PseudoKind::CliqueClass: return "clique_class";
        case PseudoKind::StableClass: return "stable_class";
        case PseudoKind::CliqueBundle: return "clique_bundle";
        case PseudoKind::StableBundle: return "stable_bundle";
    }
    return "?";
}

bool parse_pseudo_kind(const std::string& token, PseudoKind& out) {
    for (PseudoKind k : {PseudoKind::Singleton, PseudoKind::CliqueClass,
                         PseudoKind::StableClass, PseudoKind::CliqueBundle,
                         PseudoKind::StableBundle}) {
        if (token == to_string(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

bool mds_exchangeable_adjacent(const Graph& g, int x, int y) {
    if (!g.adjacent(x, y))
        throw std::invalid_argument("mds_exchangeable_adjacent: vertices must be adjacent");
    VertexSet all = VertexSet::full(g.vertex_count());
    for (auto [v1, v2] : {std::pair{x, y}, std::pair{y, x}}) {
        VertexSet outside = g.neighbors(v1) - closed_neighborhood(g, v2);
        for (int vp : outside) {
            VertexSet blocked = closed_neighborhood(g, vp);
            blocked.insert(v2);
            VertexSet candidate = all - blocked;
            candidate.insert(v1);
            if (is_dominating(g, candidate)) return false;
        }
    }
    return true;
}

std::vector<VertexSet> detect_stable_set_bundles(const Graph& g, const TwinPartition& t) {
    int n = g.vertex_count();
    // Two size-two stable classes lie in one bundle exactly when
    // N(v) u class coincides (that set is the bundle plus its exterior).
    std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
    for (size_t i = 0; i < t.classes.size(); ++i) {
        const TwinClass& c = t.classes[i];
        if (c.kind != TwinKind::StableClass || c.members.size() != 2) continue;
        VertexSet key = g.neighbors(c.members.front());
        key.insert(c.members[0]);
        key.insert(c.members[1]);
        groups[key.words()].push_back(static_cast<int>(i));
    }
    std::vector<VertexSet> bundles;
    for (auto& [key, cls] : groups) {
        if (cls.size() < 2) continue;
        VertexSet b(n);
        for (int ci : cls)
            for (int v : t.classes[ci].members) b.insert(v);
        bundles.push_back(b);
    }
    std::sort(bundles.begin(), bundles.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return bundles;
}

std::vector<VertexSet> detect_clique_bundles(const Graph& g, const TwinPartition& t) {
    int n = g.vertex_count();
    // Exchangeability is a class-level property, so one representative pair
    // per pair of classes suffices.
    std::vector<int> cand;
    for (size_t i = 0; i < t.classes.size(); ++i)
        if (t.classes[i].kind != TwinKind::StableClass)
            cand.push_back(static_cast<int>(i));
    int c = static_cast<int>(cand.size());
    std::vector<std::vector<char>> linked(c, std::vector<char>(c, 0));
    for (int a = 0; a < c; ++a) {
        for (int b = a + 1; b < c; ++b) {
            int u = t.classes[cand[a]].members.front();
            int v = t.classes[cand[b]].members.front();
            if (!g.adjacent(u, v)) continue;
            if (mds_exchangeable_adjacent(g, u, v)) linked[a][b] = linked[b][a] = 1;
        }
    }
    // Components of the linked relation, then insist every component is a
    // clique of pairwise linked classes; anything else contradicts the
    // uniqueness of the pseudo class partition.
    std::vector<int> comp(c, -1);
    int ncomp = 0;
    for (int a = 0; a < c; ++a) {
        if (comp[a] >= 0) continue;
        std::vector<int> stack{a};
        comp[a] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < c; ++v)
                if (linked[u][v] && comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(ncomp);
    for (int a = 0; a < c; ++a) members[comp[a]].push_back(a);
    std::vector<VertexSet> bundles;
    for (auto& grp : members) {
        if (grp.size() < 2) continue;
        for (size_t i = 0; i < grp.size(); ++i)
            for (size_t j = i + 1; j < grp.size(); ++j)
                if (!linked[grp[i]][grp[j]])
                    throw IntegrityError(
                        "clique bundle candidates do not form a clean partition");
        VertexSet b(n);
        for (int a : grp)
            for (int v : t.classes[cand[a]].members) b.insert(v);
        bundles.push_back(b);
    }
    std::sort(bundles.begin(), bundles.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return bundles;
}

PseudoPartition pseudo_class_partition(const Graph& g) {
    TwinPartition t = twin_partition(g);
    std::vector<VertexSet> sbundles = detect_stable_set_bundles(g, t);
    std::vector<VertexSet> cbundles = detect_clique_bundles(g, t);

    int n = g.vertex_count();
    VertexSet absorbed(n);
    std::vector<PseudoClass> classes;
    for (const VertexSet& b : sbundles) {
        classes.push_back({PseudoKind::StableBundle, b.to_vector()});
        absorbed |= b;
    }
    for (const VertexSet& b : cbundles) {
        classes.push_back({PseudoKind::CliqueBundle, b.to_vector()});
        absorbed |= b;
    }
    for (const TwinClass& c : t.classes) {
        if (absorbed.contains(c.members.front())) continue;
        PseudoKind k = c.kind == TwinKind::Singleton     ? PseudoKind::Singleton
                        : c.kind == TwinKind::CliqueClass ? PseudoKind::CliqueClass
                                                          : PseudoKind::StableClass;
        classes.push_back({k, c.members});
    }
    std::sort(classes.begin(), classes.end(),
              [](const PseudoClass& a, const PseudoClass& b) {
                  return a.members.front() < b.members.front();
              });
    PseudoPartition p;
    p.classes = std::move(classes);
    p.class_of.assign(n, -1);
    for (size_t i = 0; i < p.classes.size(); ++i)
        for (int v : p.classes[i].members)
            p.class_of[v] = static_cast<int>(i);
    return p;
}

} // namespace equidom
