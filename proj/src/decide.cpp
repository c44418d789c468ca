#include "equidom/decide.hpp"

#include "equidom/hereditary.hpp"
#include "equidom/kernel.hpp"
#include "equidom/solver.hpp"

namespace equidom {

namespace {

inline constexpr const char* kReasonKernelUnsolvable = "no structure on the kernel";

Decision no(std::string reason) {
    Decision d;
    d.reason = std::move(reason);
    return d;
}

Decision yes(WeightStructure s) {
    Decision d;
    d.yes = true;
    d.structure = std::move(s);
    return d;
}

// Weight-1 certificates for the three 1-equidominating families.
Decision classify_weight_one(const Graph& g) {
    int n = g.vertex_count();
    WeightStructure s;
    s.weights.assign(n, 1);
    if (2LL * g.edge_count() == static_cast<long long>(n) * (n - 1)) {
        s.target = 1;
        return yes(std::move(s));
    }
    if (g.edge_count() == 0) {
        s.target = n;
        return yes(std::move(s));
    }
    if (is_basic(g) && n >= 4) {
        s.target = 2;
        return yes(std::move(s));
    }
    return no(kReasonNot1Equidominating);
}

Decision run(const Graph& g, Weight param, bool target_mode) {
    if (!target_mode && param == 1) return classify_weight_one(g);

    KernelOutcome outcome =
        target_mode ? kernel_target_t(g, param) : kernel_k(g, param);
    switch (outcome.verdict) {
        case KernelVerdict::NotEquidominating: return no(outcome.reason);
        case KernelVerdict::PseudoKernel: {
            DominationInstance inst = DominationInstance::from_pseudo_graph(outcome.pseudo_kernel);
            auto res = target_mode ? solve_target_t(inst, param) : solve_k(inst, param);
            if (!res) return no(kReasonKernelUnsolvable);
            return yes(lift_structure(g, outcome.trace, res->weights, res->target));
        }
        case KernelVerdict::GraphKernel: {
            DominationInstance inst = DominationInstance::from_graph(outcome.graph_kernel);
            auto res = target_mode ? solve_target_t(inst, param) : solve_k(inst, param);
            if (!res) return no(kReasonKernelUnsolvable);
            std::vector<std::pair<int, Weight>> mapped;
            for (auto [id, w] : res->weights)
                mapped.emplace_back(outcome.kernel_new_to_old[id], w);
            std::sort(mapped.begin(), mapped.end());
            return yes(lift_structure(g, outcome.trace, mapped, res->target));
        }
    }
    return no("unreachable");
}

} // namespace

Decision decide_k_equidomination(const Graph& g, Weight k) {
    if (k < 1) throw std::invalid_argument("decide_k_equidomination: k must be positive");
    return run(g, k, false);
}

Decision decide_target_t(const Graph& g, Weight t) {
    if (t < 1) throw std::invalid_argument("decide_target_t: t must be positive");
    return run(g, t, true);
}

} // namespace equidom
