#include "equidom/kernel.hpp"

#include <algorithm>
#include <map>

#include "equidom/errors.hpp"
#include "equidom/hereditary.hpp"
#include "equidom/pseudo_classes.hpp"

namespace equidom {

const char* to_string(ReductionRule r) {
    switch (r) {
        case ReductionRule::CliqueClass: return "clique-class";
        case ReductionRule::StableBundle: return "stable-bundle";
        case ReductionRule::DemandGroup: return "demand-group";
        case ReductionRule::IsolatedStableClass: return "isolated-stable-class";
    }
    return "?";
}

KernelOutcome KernelOutcome::no(std::string why) {
    KernelOutcome o;
    o.verdict = KernelVerdict::NotEquidominating;
    o.reason = std::move(why);
    return o;
}

namespace {

GraphReduction delete_vertices(const Graph& g, const VertexSet& doomed, ReductionTrace trace) {
    GraphReduction out;
    out.trace = std::move(trace);
    VertexSet keep = VertexSet::full(g.vertex_count()) - doomed;
    InducedSubgraph sub = induced_subgraph(g, keep);
    out.graph = std::move(sub.graph);
    out.new_to_old = std::move(sub.new_to_old);
    return out;
}

} // namespace

GraphReduction reduce_clique_classes(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("reduce_clique_classes: r must be positive");
    TwinPartition t = twin_partition(g);
    VertexSet doomed(g.vertex_count());
    ReductionTrace trace;
    for (const TwinClass& c : t.classes) {
        if (c.kind != TwinKind::CliqueClass) continue;
        for (size_t i = r; i < c.members.size(); ++i) {
            doomed.insert(c.members[i]);
            trace.push_back({ReductionRule::CliqueClass, c.members[i], c.members.front()});
        }
    }
    return delete_vertices(g, doomed, std::move(trace));
}

GraphReduction reduce_stable_set_bundles(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("reduce_stable_set_bundles: r must be positive");
    TwinPartition t = twin_partition(g);
    VertexSet doomed(g.vertex_count());
    ReductionTrace trace;
    for (const VertexSet& bundle : detect_stable_set_bundles(g, t)) {
        // Classes of the bundle, by smallest member.
        std::vector<int> class_ids;
        for (int v : bundle) {
            int c = t.class_of[v];
            if (std::find(class_ids.begin(), class_ids.end(), c) == class_ids.end())
                class_ids.push_back(c);
        }
        if (static_cast<int>(class_ids.size()) <= r) continue;
        int rep = bundle.first();
        for (size_t i = r; i < class_ids.size(); ++i)
            for (int v : t.classes[class_ids[i]].members) {
                doomed.insert(v);
                trace.push_back({ReductionRule::StableBundle, v, rep});
            }
    }
    return delete_vertices(g, doomed, std::move(trace));
}

PseudoReduction reduce_pseudo_graph(const PseudoGraph& pg, int r) {
    if (r < 1) throw std::invalid_argument("reduce_pseudo_graph: r must be positive");
    for (const DemandVector& d : pg.demands)
        for (int c : d)
            if (c > r)
                throw std::invalid_argument(
                    "reduce_pseudo_graph: demand component exceeds r");
    PseudoReduction out;
    std::vector<char> doomed_id;
    std::vector<int> doomed;
    for (size_t b = 0; b < pg.blocks.size(); ++b) {
        if (pg.blocks[b].kind != PseudoKind::CliqueBundle) continue;
        for (const auto& grp : pg.groups[b]) {
            if (static_cast<int>(grp.size()) <= r) continue;
            for (size_t i = r; i < grp.size(); ++i) {
                doomed.push_back(grp[i]);
                out.trace.push_back({ReductionRule::DemandGroup, grp[i], grp.front()});
            }
        }
    }
    std::sort(doomed.begin(), doomed.end());
    auto is_doomed = [&](int id) {
        return std::binary_search(doomed.begin(), doomed.end(), id);
    };
    PseudoGraph& next = out.pg;
    for (size_t e = 0; e < pg.elements.size(); ++e) {
        if (is_doomed(pg.elements[e])) continue;
        next.elements.push_back(pg.elements[e]);
        next.demands.push_back(pg.demands[e]);
    }
    for (const PseudoBlock& b : pg.blocks) {
        PseudoBlock nb{b.kind, {}};
        for (int id : b.members)
            if (!is_doomed(id)) nb.members.push_back(id);
        next.blocks.push_back(std::move(nb));
    }
    next.check_invariants();
    next.rebuild_groups();
    return out;
}

namespace {

// Map ids of a reduced graph (and its trace) back through new_to_old.
ReductionTrace map_trace(const ReductionTrace& trace, const std::vector<int>& new_to_old) {
    ReductionTrace out;
    out.reserve(trace.size());
    for (const TraceEntry& e : trace)
        out.push_back({e.rule, new_to_old[e.deleted], new_to_old[e.representative]});
    return out;
}

PseudoGraph map_pseudo_ids(const PseudoGraph& pg, const std::vector<int>& new_to_old) {
    PseudoGraph out;
    std::vector<std::pair<int, DemandVector>> rows;
    for (size_t e = 0; e < pg.elements.size(); ++e)
        rows.emplace_back(new_to_old[pg.elements[e]], pg.demands[e]);
    std::sort(rows.begin(), rows.end());
    for (auto& [id, d] : rows) {
        out.elements.push_back(id);
        out.demands.push_back(std::move(d));
    }
    for (const PseudoBlock& b : pg.blocks) {
        PseudoBlock nb{b.kind, {}};
        for (int id : b.members) nb.members.push_back(new_to_old[id]);
        std::sort(nb.members.begin(), nb.members.end());
        out.blocks.push_back(std::move(nb));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const PseudoBlock& a, const PseudoBlock& b) {
                  return a.members.front() < b.members.front();
              });
    out.check_invariants();
    out.rebuild_groups();
    return out;
}

struct EarlyChecks {
    bool failed = false;
    std::string reason;
};

// Lower bound on the target whenever some mds dominates v exclusively from
// inside the bundle P_i (tested via (V \ N[v]) u P_i dominating): such an mds
// holds more than |P_i \ N[v]| bundle vertices. Zero when no such mds exists;
// this is the sound refusal quantity, unlike the solver-facing demand.
Weight exclusive_cover_bound(const Graph& g, const PseudoClass& pc, int v) {
    VertexSet test = VertexSet::full(g.vertex_count()) - closed_neighborhood(g, v);
    int outside_nv = 0;
    for (int u : pc.members) {
        if (!g.adjacent(u, v)) ++outside_nv;
        test.insert(u);
    }
    return is_dominating(g, test) ? outside_nv + 1 : 0;
}

// The three refusal conditions shared by both pipelines: a stable class above
// the class cap, more than `max_classes` pseudo classes, or an exclusive
// cover bound above `demand_cap`. Returns the partition via out-param when
// the instance passes.
EarlyChecks refusal_checks(const Graph& g, Weight class_cap, Weight max_classes,
                           Weight demand_cap, PseudoPartition& p_out) {
    TwinPartition t = twin_partition(g);
    for (const TwinClass& c : t.classes)
        if (c.kind == TwinKind::StableClass &&
            static_cast<Weight>(c.members.size()) > class_cap)
            return {true, kReasonStableClassTooBig};
    p_out = pseudo_class_partition(g);
    if (static_cast<Weight>(p_out.classes.size()) > max_classes)
        return {true, kReasonTooManyPseudoClasses};
    for (size_t i = 0; i < p_out.classes.size(); ++i) {
        const PseudoClass& pc = p_out.classes[i];
        Weight own = pc.kind == PseudoKind::StableBundle ? 2
                     : pc.kind == PseudoKind::StableClass
                         ? static_cast<Weight>(pc.members.size())
                         : 1;
        if (own > demand_cap) return {true, kReasonDemandExceedsBound};
        if (pc.kind != PseudoKind::CliqueBundle) continue;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (p_out.class_of[v] != static_cast<int>(i) &&
                exclusive_cover_bound(g, pc, v) > demand_cap)
                return {true, kReasonDemandExceedsBound};
    }
    return {};
}

// Shared tail of both pipelines: clique classes to r, stable set bundles to
// ceil(r/2) classes, pseudo graph rebuild, demand groups to r. `max_classes`
// is t (resp. k) for the re-checks on the reduced graph.
KernelOutcome reduce_to_pseudo_kernel(const Graph& g, Weight class_cap, Weight max_classes,
                                      Weight r) {
    GraphReduction cc = reduce_clique_classes(g, static_cast<int>(r));
    GraphReduction sb = reduce_stable_set_bundles(cc.graph, static_cast<int>((r + 1) / 2));

    std::vector<int> to_orig(sb.graph.vertex_count());
    for (int v = 0; v < sb.graph.vertex_count(); ++v)
        to_orig[v] = cc.new_to_old[sb.new_to_old[v]];

    ReductionTrace trace = cc.trace;
    for (const TraceEntry& e : map_trace(sb.trace, cc.new_to_old)) trace.push_back(e);

    // Deletions can merge or split twin structure, so the refusal conditions
    // are re-validated on the reduced graph before the demand-group rule.
    PseudoPartition p2;
    EarlyChecks again = refusal_checks(sb.graph, class_cap, max_classes, r, p2);
    if (again.failed) return KernelOutcome::no(again.reason);

    PseudoGraph pg2 = build_pseudo_graph(sb.graph, p2);
    // The demand-group rule is safe only while minimal dense sets cannot put
    // more than r elements into a block, which the demand components bound.
    // A component above r (possible when some vertex sees a bundle that can
    // never exclusively cover it) leaves the pseudo graph untrimmed.
    bool trimmable = true;
    for (const DemandVector& d : pg2.demands)
        for (int c : d) trimmable &= static_cast<Weight>(c) <= r;
    PseudoReduction pr;
    if (trimmable)
        pr = reduce_pseudo_graph(pg2, static_cast<int>(r));
    else
        pr.pg = pg2;

    KernelOutcome out;
    out.verdict = KernelVerdict::PseudoKernel;
    out.pseudo_kernel = map_pseudo_ids(pr.pg, to_orig);
    out.trace = std::move(trace);
    for (const TraceEntry& e : map_trace(pr.trace, to_orig)) out.trace.push_back(e);
    return out;
}

} // namespace

KernelOutcome kernel_target_t(const Graph& g, Weight t) {
    if (t < 1) throw std::invalid_argument("kernel_target_t: t must be positive");
    PseudoPartition p;
    EarlyChecks checks = refusal_checks(g, t, t, t, p);
    if (checks.failed) return KernelOutcome::no(checks.reason);
    return reduce_to_pseudo_kernel(g, t, t, t);
}

KernelOutcome kernel_k(const Graph& g, Weight k) {
    if (k < 1) throw std::invalid_argument("kernel_k: k must be positive");
    int n = g.vertex_count();
    if (k == 1) {
        bool complete = 2LL * g.edge_count() == static_cast<long long>(n) * (n - 1);
        bool edgeless = g.edge_count() == 0;
        bool paired = is_basic(g) && n >= 4;
        if (!complete && !edgeless && !paired)
            return KernelOutcome::no(kReasonNot1Equidominating);
        KernelOutcome out;
        out.verdict = KernelVerdict::GraphKernel;
        out.graph_kernel = g;
        out.kernel_new_to_old.resize(n);
        for (int v = 0; v < n; ++v) out.kernel_new_to_old[v] = v;
        return out;
    }

    PseudoPartition p = pseudo_class_partition(g);
    if (static_cast<Weight>(p.classes.size()) > k)
        return KernelOutcome::no(kReasonTooManyPseudoClasses);

    Weight k2 = k * k, k5 = k2 * k2 * k;
    std::vector<int> big;
    int big_stable = -1;
    for (size_t i = 0; i < p.classes.size(); ++i) {
        if (static_cast<Weight>(p.classes[i].members.size()) < k2) continue;
        big.push_back(static_cast<int>(i));
        if (p.classes[i].kind == PseudoKind::StableClass) big_stable = static_cast<int>(i);
    }
    if (big_stable >= 0 && big.size() >= 2)
        return KernelOutcome::no(kReasonTwoBigClasses);

    if (big_stable < 0) {
        // Every big pseudo class is a clique class or a bundle; any structure
        // has target at most k^3+k^2, so that is the reduction bound.
        Weight r = k * k2 + k2;
        PseudoPartition dummy;
        EarlyChecks checks = refusal_checks(g, r, k, r, dummy);
        if (checks.failed) return KernelOutcome::no(checks.reason);
        return reduce_to_pseudo_kernel(g, r, k, r);
    }

    const PseudoClass& s = p.classes[big_stable];
    if (static_cast<Weight>(s.members.size()) < k5) {
        KernelOutcome out;
        out.verdict = KernelVerdict::GraphKernel;
        out.graph_kernel = g;
        out.kernel_new_to_old.resize(n);
        for (int v = 0; v < n; ++v) out.kernel_new_to_old[v] = v;
        return out;
    }
    bool isolated = true;
    for (int v : s.members) isolated &= g.degree(v) == 0;
    if (!isolated) return KernelOutcome::no(kReasonBigNonIsolatedStable);

    VertexSet doomed(n);
    ReductionTrace trace;
    for (size_t i = static_cast<size_t>(k5); i < s.members.size(); ++i) {
        doomed.insert(s.members[i]);
        trace.push_back({ReductionRule::IsolatedStableClass, s.members[i], s.members.front()});
    }
    GraphReduction red = delete_vertices(g, doomed, std::move(trace));
    KernelOutcome out;
    out.verdict = KernelVerdict::GraphKernel;
    out.graph_kernel = std::move(red.graph);
    out.kernel_new_to_old = std::move(red.new_to_old);
    out.trace = std::move(red.trace);
    return out;
}

WeightStructure lift_structure(const Graph& g, const ReductionTrace& trace,
                               const std::vector<std::pair<int, Weight>>& kernel_weights,
                               Weight kernel_target) {
    WeightStructure s;
    s.weights.assign(g.vertex_count(), 0);
    s.target = kernel_target;
    for (auto [id, w] : kernel_weights) {
        if (id < 0 || id >= g.vertex_count())
            throw IntegrityError("lift_structure: kernel weight outside the graph");
        s.weights[id] = w;
    }
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        Weight rep = s.weights[it->representative];
        if (rep == 0)
            throw IntegrityError("lift_structure: representative carries no weight");
        s.weights[it->deleted] = rep;
        if (it->rule == ReductionRule::IsolatedStableClass) s.target += rep;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.weights[v] == 0)
            throw IntegrityError("lift_structure: vertex left without a weight");
    return s;
}

} // namespace equidom
