#include "equidom/solver.hpp"

#include <algorithm>
#include <numeric>

#include "equidom/errors.hpp"

namespace equidom {

namespace {

constexpr long long kTableCap = 1 << 21;

std::vector<SolveBlock> blocks_from_partition(const PseudoPartition& p) {
    std::vector<SolveBlock> blocks;
    for (const PseudoClass& pc : p.classes)
        blocks.push_back({pc.kind, pc.members, pc.kind == PseudoKind::StableClass});
    return blocks;
}

std::vector<SolveBlock> blocks_from_pseudo(const PseudoGraph& pg) {
    std::vector<SolveBlock> blocks;
    for (size_t b = 0; b < pg.blocks.size(); ++b) {
        std::vector<int> canonical;
        for (const auto& grp : pg.groups[b])
            canonical.insert(canonical.end(), grp.begin(), grp.end());
        blocks.push_back({pg.blocks[b].kind, std::move(canonical),
                          pg.blocks[b].kind == PseudoKind::StableClass});
    }
    return blocks;
}

} // namespace

DominationInstance DominationInstance::from_graph(const Graph& g) {
    return from_graph(g, pseudo_class_partition(g));
}

DominationInstance DominationInstance::from_graph(const Graph& g, const PseudoPartition& p) {
    DominationInstance inst;
    inst.graph_ = g;
    inst.blocks_ = blocks_from_partition(p);
    inst.finish_setup();
    return inst;
}

DominationInstance DominationInstance::from_pseudo_graph(const PseudoGraph& pg) {
    DominationInstance inst;
    inst.pseudo_ = pg;
    inst.blocks_ = blocks_from_pseudo(pg);
    inst.finish_setup();
    return inst;
}

void DominationInstance::finish_setup() {
    elements_.clear();
    int max_id = -1;
    for (const auto& b : blocks_) {
        elements_.insert(elements_.end(), b.canonical.begin(), b.canonical.end());
        for (int id : b.canonical) max_id = std::max(max_id, id);
    }
    std::sort(elements_.begin(), elements_.end());
    block_of_.assign(max_id + 1, -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int id : blocks_[b].canonical) block_of_[id] = static_cast<int>(b);

    radix_.assign(blocks_.size(), 0);
    long long cells = 1;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        radix_[b] = cells;
        cells *= static_cast<long long>(blocks_[b].canonical.size()) + 1;
        if (cells > kTableCap) break;
    }
    if (cells <= kTableCap) {
        table_.assign(cells, 0);
        std::vector<int> counts(blocks_.size(), 0);
        for (long long cell = 0; cell < cells; ++cell) {
            long long rest = cell;
            for (size_t b = 0; b < blocks_.size(); ++b) {
                long long width = static_cast<long long>(blocks_[b].canonical.size()) + 1;
                counts[b] = static_cast<int>(rest % width);
                rest /= width;
            }
            if (pseudo_) {
                table_[cell] = is_minimal_dense_counts(*pseudo_, counts);
            } else {
                table_[cell] = is_mds(*graph_, VertexSet::of(graph_->vertex_count(),
                                                             representative_for_counts(counts)));
            }
        }
        has_table_ = true;
    }
}

int DominationInstance::block_of(int id) const {
    if (id < 0 || id >= static_cast<int>(block_of_.size())) return -1;
    return block_of_[id];
}

bool DominationInstance::is_feasible(const std::vector<int>& ids) const {
    if (graph_) return is_dominating(*graph_, VertexSet::of(graph_->vertex_count(), ids));
    std::vector<int> counts(blocks_.size(), 0);
    for (int id : ids) ++counts[block_of(id)];
    return is_dense_counts(*pseudo_, counts);
}

bool DominationInstance::is_solution(const std::vector<int>& ids) const {
    if (graph_) return is_mds(*graph_, VertexSet::of(graph_->vertex_count(), ids));
    std::vector<int> counts(blocks_.size(), 0);
    for (int id : ids) ++counts[block_of(id)];
    return is_minimal_dense_counts(*pseudo_, counts);
}

bool DominationInstance::is_solution_counts(const std::vector<int>& counts) const {
    if (has_table_) {
        long long cell = 0;
        for (size_t b = 0; b < counts.size(); ++b) cell += radix_[b] * counts[b];
        return table_[cell];
    }
    if (pseudo_) return is_minimal_dense_counts(*pseudo_, counts);
    return is_mds(*graph_,
                  VertexSet::of(graph_->vertex_count(), representative_for_counts(counts)));
}

std::vector<int> DominationInstance::representative_for_counts(
    const std::vector<int>& counts) const {
    std::vector<int> ids;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        std::vector<int> sorted = blocks_[b].canonical;
        std::sort(sorted.begin(), sorted.end());
        ids.insert(ids.end(), sorted.begin(), sorted.begin() + counts[b]);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

struct OmegaEnumerator {
    const std::vector<SolveBlock>& blocks;
    Weight k;
    const std::function<bool(const OmegaFunction&)>& visit;
    std::vector<char> used; // weight values 1..k
    OmegaFunction current;
    bool stopped = false;

    bool run() { return descend(0); }

    // Returns false to stop the whole enumeration.
    bool descend(size_t b) {
        if (b == blocks.size()) return visit(current);
        int size = static_cast<int>(blocks[b].canonical.size());
        int max_values = blocks[b].multi_weight ? size : 1;
        std::vector<Weight> chosen;
        return choose_values(b, size, max_values, 1, chosen);
    }

    // Pick an ascending set of unused weight values for block b, then split
    // the block size into that many positive runs.
    bool choose_values(size_t b, int size, int max_values, Weight from,
                       std::vector<Weight>& chosen) {
        if (!chosen.empty() && static_cast<int>(chosen.size()) <= size) {
            if (!compose(b, size, 0, chosen)) return false;
        }
        if (static_cast<int>(chosen.size()) == max_values) return true;
        for (Weight w = from; w <= k; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            chosen.push_back(w);
            bool keep = choose_values(b, size, max_values, w + 1, chosen);
            chosen.pop_back();
            used[w] = 0;
            if (!keep) return false;
        }
        return true;
    }

    // Runs get the chosen values in ascending order; counts are a composition
    // of the block size into positive parts.
    bool compose(size_t b, int remaining, size_t vi, std::vector<Weight>& chosen) {
        if (vi + 1 == chosen.size()) {
            current.push_back({static_cast<int>(b), chosen[vi], remaining});
            bool keep = descend(b + 1);
            current.pop_back();
            return keep;
        }
        int slots_after = static_cast<int>(chosen.size() - vi) - 1;
        for (int part = 1; part + slots_after <= remaining; ++part) {
            current.push_back({static_cast<int>(b), chosen[vi], part});
            bool keep = compose(b, remaining - part, vi + 1, chosen);
            current.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

void enumerate_omega(const DominationInstance& inst, Weight k,
                     const std::function<bool(const OmegaFunction&)>& visit) {
    if (k < 1) return;
    OmegaEnumerator e{inst.blocks(), k, visit,
                      std::vector<char>(static_cast<size_t>(k) + 1, 0), {}};
    e.run();
}

long long count_omega(const DominationInstance& inst, Weight k) {
    long long n = 0;
    enumerate_omega(inst, k, [&](const OmegaFunction&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<int> representative_subset(const DominationInstance& inst, const OmegaFunction& w,
                                       const std::vector<int>& x) {
    // Preimage of each weight value, smallest ids first.
    std::vector<int> out;
    for (size_t run = 0, offset = 0, prev_block = static_cast<size_t>(-1); run < w.size();
         ++run) {
        if (w[run].block != static_cast<int>(prev_block)) {
            offset = 0;
            prev_block = w[run].block;
        }
        const auto& canonical = inst.blocks()[w[run].block].canonical;
        std::vector<int> ids(canonical.begin() + offset,
                             canonical.begin() + offset + w[run].count);
        std::sort(ids.begin(), ids.end());
        int take = x[run];
        out.insert(out.end(), ids.begin(), ids.begin() + take);
        offset += w[run].count;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> find_any_minimal_solution(const DominationInstance& inst) {
    std::vector<int> current = inst.elements();
    if (!inst.is_feasible(current))
        throw IntegrityError("instance has no feasible set; whole universe fails");
    for (int i = static_cast<int>(current.size()) - 1; i >= 0; --i) {
        std::vector<int> without = current;
        without.erase(std::find(without.begin(), without.end(), current[i]));
        if (inst.is_feasible(without)) current = std::move(without);
    }
    return current;
}

namespace {

std::optional<SolveResult> run_algorithm(const DominationInstance& inst, Weight k,
                                         std::optional<Weight> target) {
    if (static_cast<Weight>(inst.blocks().size()) > k) return std::nullopt;
    std::vector<int> base = find_any_minimal_solution(inst);

    std::optional<SolveResult> found;
    std::vector<std::pair<int, Weight>> id_weight;
    enumerate_omega(inst, k, [&](const OmegaFunction& w) {
        // Weight of the fixed minimal solution under w.
        id_weight.clear();
        {
            size_t offset = 0;
            int prev_block = -1;
            for (const OmegaRun& r : w) {
                if (r.block != prev_block) {
                    offset = 0;
                    prev_block = r.block;
                }
                const auto& canonical = inst.blocks()[r.block].canonical;
                for (int i = 0; i < r.count; ++i)
                    id_weight.emplace_back(canonical[offset + i], r.weight);
                offset += r.count;
            }
            std::sort(id_weight.begin(), id_weight.end());
        }
        Weight tw = 0;
        for (int id : base) {
            auto it = std::lower_bound(id_weight.begin(), id_weight.end(),
                                       std::make_pair(id, Weight{0}));
            tw += it->second;
        }
        if (target && tw != *target) return true;

        // Type-vector sweep: x_i ranges over 0..|w^-1(i)| per run; accept w
        // iff the representative is a solution exactly when sum(i*x_i) = tw.
        size_t runs = w.size();
        std::vector<int> x(runs, 0);
        std::vector<int> counts(inst.blocks().size(), 0);
        Weight sum = 0;
        bool ok = true;
        while (true) {
            bool sol = inst.is_solution_counts(counts);
            if (sol != (sum == tw)) {
                ok = false;
                break;
            }
            size_t i = 0;
            while (i < runs && x[i] == w[i].count) {
                sum -= w[i].weight * x[i];
                counts[w[i].block] -= x[i];
                x[i] = 0;
                ++i;
            }
            if (i == runs) break;
            ++x[i];
            sum += w[i].weight;
            ++counts[w[i].block];
        }
        if (!ok) return true;

        found = SolveResult{id_weight, tw};
        return false;
    });
    return found;
}

} // namespace

std::optional<SolveResult> solve_k(const DominationInstance& inst, Weight k) {
    if (k < 1) throw std::invalid_argument("solve_k: k must be positive");
    return run_algorithm(inst, k, std::nullopt);
}

std::optional<SolveResult> solve_target_t(const DominationInstance& inst, Weight t) {
    if (t < 1) throw std::invalid_argument("solve_target_t: t must be positive");
    return run_algorithm(inst, t, t);
}

WeightStructure to_weight_structure(const SolveResult& r, int n) {
    WeightStructure s;
    s.weights.assign(n, 0);
    s.target = r.target;
    for (auto [id, w] : r.weights) s.weights[id] = w;
    for (int v = 0; v < n; ++v)
        if (s.weights[v] == 0)
            throw IntegrityError("solve result does not cover all vertex ids");
    return s;
}

} // namespace equidom
