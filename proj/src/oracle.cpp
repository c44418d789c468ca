#include "equidom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "equidom/errors.hpp"

namespace equidom {

namespace {

using Mask = std::uint64_t;

void require_n(const Graph& g, const OracleBudget& b, const char* who) {
    if (g.vertex_count() > b.max_n || g.vertex_count() > 63) {
        std::ostringstream os;
        os << who << ": refused, n=" << g.vertex_count() << " exceeds oracle cap "
           << std::min(b.max_n, 63);
        throw BudgetError(os.str());
    }
}

std::vector<Mask> closed_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Mask> nb(n);
    for (int v = 0; v < n; ++v) {
        Mask m = 1ULL << v;
        for (int u : g.neighbor_list(v)) m |= 1ULL << u;
        nb[v] = m;
    }
    return nb;
}

bool mask_is_mds(const std::vector<Mask>& nb, Mask full, Mask d) {
    Mask cover = 0;
    for (Mask rest = d; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        cover |= nb[v];
    }
    if (cover != full) return false;
    for (Mask rest = d; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        Mask others = 0;
        for (Mask r2 = d & ~(1ULL << v); r2;) {
            int u = __builtin_ctzll(r2);
            r2 &= r2 - 1;
            others |= nb[u];
        }
        if (!(nb[v] & ~others)) return false;
    }
    return true;
}

std::vector<Mask> mds_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Mask> nb = closed_masks(g);
    Mask full = n == 63 ? ~0ULL : (1ULL << n) - 1;
    std::vector<Mask> out;
    for (Mask d = 1; d <= full; ++d)
        if (mask_is_mds(nb, full, d)) out.push_back(d);
    return out;
}

std::vector<int> mask_to_ids(Mask m) {
    std::vector<int> ids;
    while (m) {
        ids.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return ids;
}

} // namespace

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* env = std::getenv("EQUIDOM_BUDGET")) {
        std::string v(env);
        size_t colon = v.find(':');
        try {
            b.max_n = std::stoi(v.substr(0, colon));
            if (colon != std::string::npos)
                b.max_brute_ops = std::stod(v.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("EQUIDOM_BUDGET: expected \"<max_n>[:<max_ops>]\"");
        }
    }
    return b;
}

std::vector<VertexSet> enumerate_mds(const Graph& g, const OracleBudget& budget) {
    require_n(g, budget, "enumerate_mds");
    int n = g.vertex_count();
    std::vector<std::vector<int>> sets;
    for (Mask m : mds_masks(g)) sets.push_back(mask_to_ids(m));
    std::sort(sets.begin(), sets.end());
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (auto& ids : sets) out.push_back(VertexSet::of(n, ids));
    return out;
}

bool verify_structure(const Graph& g, const WeightStructure& s, const OracleBudget& budget) {
    require_n(g, budget, "verify_structure");
    int n = g.vertex_count();
    std::vector<Mask> mds = mds_masks(g);
    for (Mask d : mds) {
        Weight w = 0;
        for (int v : mask_to_ids(d)) w += s.weights[v];
        if (w != s.target) return false;
    }
    std::unordered_set<Mask> mds_set(mds.begin(), mds.end());

    // Enumerate subsets of weight exactly target: vertices in descending
    // weight order, pruning on remaining weight against suffix sums.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.weights[a] > s.weights[b]; });
    std::vector<Weight> suffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + s.weights[order[i]];

    bool ok = true;
    auto dfs = [&](auto&& self, int i, Weight remaining, Mask chosen) -> void {
        if (!ok) return;
        if (remaining == 0) {
            if (!mds_set.count(chosen)) ok = false;
            return;
        }
        if (i == n || remaining > suffix[i]) return;
        if (s.weights[order[i]] <= remaining)
            self(self, i + 1, remaining - s.weights[order[i]], chosen | (1ULL << order[i]));
        self(self, i + 1, remaining, chosen);
    };
    dfs(dfs, 0, s.target, 0);
    return ok;
}

namespace {

// Shared sweep for the two structure searches. When target is set, only that
// target qualifies; otherwise the target is read off the lexicographically
// first mds per weight function.
std::optional<WeightStructure> sweep_structures(const Graph& g, int k,
                                                std::optional<Weight> target,
                                                const OracleBudget& budget) {
    require_n(g, budget, "brute_force structure sweep");
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("structure sweep on empty graph");
    if (std::pow(static_cast<double>(k), n) * std::pow(2.0, n) > budget.max_brute_ops ||
        n > 22) {
        std::ostringstream os;
        os << "brute force structure sweep: refused, k^n * 2^n exceeds budget "
           << budget.max_brute_ops << " (or n > 22)";
        throw BudgetError(os.str());
    }
    std::vector<Mask> mds = mds_masks(g);
    std::vector<std::vector<int>> mds_ids;
    for (Mask m : mds) mds_ids.push_back(mask_to_ids(m));
    size_t first_lex = 0;
    for (size_t i = 1; i < mds.size(); ++i)
        if (mds_ids[i] < mds_ids[first_lex]) first_lex = i;

    Mask full = (n >= 63) ? ~0ULL : (1ULL << n) - 1;
    std::vector<char> is_sol(static_cast<size_t>(full) + 1, 0);
    for (Mask m : mds) is_sol[m] = 1;

    std::vector<Weight> w(n, 1);
    std::vector<Weight> sum(static_cast<size_t>(full) + 1, 0);
    while (true) {
        Weight t;
        if (target) {
            t = *target;
        } else {
            t = 0;
            for (int v : mds_ids[first_lex]) t += w[v];
        }
        for (Mask m = 1; m <= full; ++m) {
            int low = __builtin_ctzll(m);
            sum[m] = sum[m & (m - 1)] + w[low];
        }
        bool good = true;
        for (Mask m = 1; m <= full; ++m)
            if ((sum[m] == t) != static_cast<bool>(is_sol[m])) {
                good = false;
                break;
            }
        if (good) return WeightStructure{w, t};
        int pos = n - 1;
        while (pos >= 0 && w[pos] == k) w[pos--] = 1;
        if (pos < 0) return std::nullopt;
        ++w[pos];
    }
}

} // namespace

std::optional<WeightStructure> brute_force_k_equidominating(const Graph& g, int k,
                                                            const OracleBudget& budget) {
    return sweep_structures(g, k, std::nullopt, budget);
}

std::optional<WeightStructure> brute_force_target_t(const Graph& g, Weight t,
                                                    const OracleBudget& budget) {
    return sweep_structures(g, static_cast<int>(t), t, budget);
}

bool mds_exchangeable_bruteforce(const Graph& g, int x, int y, const OracleBudget& budget) {
    require_n(g, budget, "mds_exchangeable_bruteforce");
    std::vector<Mask> mds = mds_masks(g);
    std::unordered_set<Mask> mds_set(mds.begin(), mds.end());
    Mask mx = 1ULL << x, my = 1ULL << y;
    bool found = false;
    for (Mask d : mds) {
        bool hx = d & mx, hy = d & my;
        if (hx == hy) continue;
        found = true;
        if (!mds_set.count(d ^ mx ^ my)) return false;
    }
    return found;
}

} // namespace equidom
