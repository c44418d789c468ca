#include "equidom/pseudo_graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "equidom/errors.hpp"

namespace equidom {

int PseudoGraph::element_index(int id) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), id);
    if (it == elements.end() || *it != id) return -1;
    return static_cast<int>(it - elements.begin());
}

int PseudoGraph::block_of(int id) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].members.begin(), blocks[i].members.end(), id))
            return static_cast<int>(i);
    return -1;
}

void PseudoGraph::rebuild_groups() {
    groups.clear();
    groups.resize(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].kind != PseudoKind::CliqueBundle) {
            groups[b].push_back(blocks[b].members);
            continue;
        }
        std::map<DemandVector, std::vector<int>> by_demand;
        for (int id : blocks[b].members)
            by_demand[demands[element_index(id)]].push_back(id);
        for (auto& [d, ids] : by_demand) groups[b].push_back(ids);
        std::sort(groups[b].begin(), groups[b].end(),
                  [](const std::vector<int>& a, const std::vector<int>& b2) {
                      return a.front() < b2.front();
                  });
    }
}

void PseudoGraph::check_invariants() const {
    size_t covered = 0;
    for (const auto& b : blocks) covered += b.members.size();
    if (covered != elements.size())
        throw IntegrityError("pseudo graph blocks do not partition the elements");
    for (size_t i = 0; i < elements.size(); ++i) {
        if (demands[i].size() != blocks.size())
            throw IntegrityError("demand vector length mismatch");
        bool nonzero = false;
        for (int c : demands[i]) nonzero |= c > 0;
        if (!nonzero) throw IntegrityError("all-zero demand vector");
    }
}

DemandVector demand_vector(const Graph& g, const PseudoPartition& p, int v) {
    int s = static_cast<int>(p.classes.size());
    DemandVector d(s, 0);
    VertexSet nv = closed_neighborhood(g, v);
    for (int i = 0; i < s; ++i) {
        const PseudoClass& pc = p.classes[i];
        if (p.class_of[v] == i) {
            switch (pc.kind) {
                case PseudoKind::Singleton:
                case PseudoKind::CliqueClass:
                case PseudoKind::CliqueBundle: d[i] = 1; break;
                case PseudoKind::StableBundle: d[i] = 2; break;
                case PseudoKind::StableClass: d[i] = static_cast<int>(pc.members.size()); break;
            }
        } else if (pc.kind != PseudoKind::CliqueBundle) {
            d[i] = g.adjacent(v, pc.members.front()) ? 1 : 0;
        } else {
            // Bundle members are interchangeable in any solution, so the
            // selection inside P_i is adversarial: only when it exceeds the
            // number of non-neighbors of v must it hit a neighbor. Without
            // any neighbor the block can never cover v.
            int outside_nv = 0;
            for (int u : pc.members)
                if (!nv.contains(u)) ++outside_nv;
            bool seen = outside_nv < static_cast<int>(pc.members.size());
            d[i] = seen ? outside_nv + 1 : 0;
        }
    }
    return d;
}

PseudoGraph build_pseudo_graph(const Graph& g) {
    return build_pseudo_graph(g, pseudo_class_partition(g));
}

PseudoGraph build_pseudo_graph(const Graph& g, const PseudoPartition& p) {
    PseudoGraph pg;
    pg.elements.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) pg.elements[v] = v;
    for (const PseudoClass& pc : p.classes)
        pg.blocks.push_back({pc.kind, pc.members});
    pg.demands.reserve(pg.elements.size());
    for (int v = 0; v < g.vertex_count(); ++v)
        pg.demands.push_back(demand_vector(g, p, v));
    pg.check_invariants();
    pg.rebuild_groups();
    return pg;
}

bool is_dense_counts(const PseudoGraph& pg, const std::vector<int>& counts) {
    for (size_t e = 0; e < pg.elements.size(); ++e) {
        const DemandVector& d = pg.demands[e];
        bool ok = false;
        for (size_t i = 0; i < d.size() && !ok; ++i)
            ok = d[i] > 0 && d[i] <= counts[i];
        if (!ok) return false;
    }
    return true;
}

bool is_minimal_dense_counts(const PseudoGraph& pg, const std::vector<int>& counts) {
    if (!is_dense_counts(pg, counts)) return false;
    // Density is monotone in the counts, so dropping one element at a time is
    // a complete minimality test; which element of a block is dropped is
    // irrelevant.
    std::vector<int> fewer = counts;
    for (size_t i = 0; i < fewer.size(); ++i) {
        if (fewer[i] == 0) continue;
        --fewer[i];
        if (is_dense_counts(pg, fewer)) return false;
        ++fewer[i];
    }
    return true;
}

namespace {

std::vector<int> block_counts(const PseudoGraph& pg, const std::vector<int>& x) {
    std::vector<int> counts(pg.blocks.size(), 0);
    for (int id : x) {
        int b = pg.block_of(id);
        if (b < 0) throw std::invalid_argument("subset contains a non-element");
        ++counts[b];
    }
    return counts;
}

} // namespace

bool is_dense(const PseudoGraph& pg, const std::vector<int>& x) {
    return is_dense_counts(pg, block_counts(pg, x));
}

bool is_minimal_dense(const PseudoGraph& pg, const std::vector<int>& x) {
    return is_minimal_dense_counts(pg, block_counts(pg, x));
}

std::string serialize_pseudo_graph(const PseudoGraph& pg) {
    std::ostringstream os;
    os << "pg " << pg.elements.size() << " " << pg.blocks.size() << "\n";
    for (const auto& b : pg.blocks) {
        os << "b " << to_string(b.kind);
        for (int id : b.members) os << " " << id + 1;
        os << "\n";
    }
    for (size_t e = 0; e < pg.elements.size(); ++e) {
        os << "m " << pg.elements[e] + 1;
        for (int c : pg.demands[e]) os << " " << c;
        os << "\n";
    }
    return os.str();
}

PseudoGraph parse_pseudo_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& why) -> void {
        std::ostringstream os;
        os << "parse error at line " << line_no << ": " << why;
        throw ParseError(os.str());
    };
    PseudoGraph pg;
    long long nv = -1, ns = -1;
    int blocks_seen = 0;
    std::vector<std::pair<int, DemandVector>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "pg") {
            if (nv >= 0) fail("duplicate header");
            if (!(is >> nv >> ns) || nv <= 0 || ns <= 0) fail("malformed header");
        } else if (tag == "b") {
            if (nv < 0) fail("block before header");
            if (++blocks_seen > ns) fail("more blocks than declared");
            std::string kind_tok;
            if (!(is >> kind_tok)) fail("missing block kind");
            PseudoKind kind;
            if (!parse_pseudo_kind(kind_tok, kind)) fail("unknown block kind");
            std::vector<int> members;
            int id;
            while (is >> id) members.push_back(id - 1);
            if (members.empty()) fail("empty block");
            std::sort(members.begin(), members.end());
            pg.blocks.push_back({kind, members});
        } else if (tag == "m") {
            if (blocks_seen != ns) fail("demand row before all blocks");
            int id;
            if (!(is >> id)) fail("malformed demand row");
            DemandVector d;
            int c;
            while (is >> c) d.push_back(c);
            if (static_cast<long long>(d.size()) != ns) fail("demand vector length mismatch");
            rows.emplace_back(id - 1, std::move(d));
        } else {
            fail("unrecognized line");
        }
    }
    if (nv < 0) throw ParseError("parse error: missing pseudo graph header");
    if (static_cast<long long>(rows.size()) != nv)
        throw ParseError("parse error: demand row count does not match header");
    std::sort(rows.begin(), rows.end());
    for (auto& [id, d] : rows) {
        pg.elements.push_back(id);
        pg.demands.push_back(std::move(d));
    }
    pg.check_invariants();
    pg.rebuild_groups();
    return pg;
}

PseudoGraph parse_pseudo_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_pseudo_graph(is);
}

} // namespace equidom
