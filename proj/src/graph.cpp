#include "equidom/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "equidom/errors.hpp"

namespace equidom {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex id out of range");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    nbrs_.resize(n);
    m_ = 0;
    for (int v = 0; v < n; ++v) {
        nbrs_[v] = adj_[v].to_vector();
        m_ += static_cast<int>(nbrs_[v].size());
    }
    m_ /= 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

VertexSet private_neighbors(const Graph& g, int v, const VertexSet& s) {
    if (!s.contains(v))
        throw std::invalid_argument("private_neighbors: v must be in S");
    VertexSet rest = s;
    rest.erase(v);
    return closed_neighborhood(g, v) - closed_neighborhood(g, rest);
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    VertexSet cover = d;
    for (int v : d) cover |= g.neighbors(v);
    return cover == VertexSet::full(g.vertex_count());
}

bool is_mds(const Graph& g, const VertexSet& d) {
    int n = g.vertex_count();
    VertexSet cover = d;
    for (int v : d) cover |= g.neighbors(v);
    if (cover != VertexSet::full(n)) return false;
    // x is a private neighbor of exactly one dominator; collect all vertices
    // with a unique dominator, then every member of D must reach one.
    std::vector<int> dominators(n, 0);
    for (int x = 0; x < n; ++x) {
        VertexSet nx = closed_neighborhood(g, x);
        nx &= d;
        dominators[x] = nx.size();
    }
    VertexSet unique(n);
    for (int x = 0; x < n; ++x)
        if (dominators[x] == 1) unique.insert(x);
    for (int v : d) {
        VertexSet nv = closed_neighborhood(g, v);
        nv &= unique;
        if (nv.empty()) return false;
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.empty())
        throw std::invalid_argument("induced_subgraph: W must be non-empty");
    InducedSubgraph out;
    out.old_to_new.assign(g.vertex_count(), -1);
    out.new_to_old = w.to_vector();
    for (size_t i = 0; i < out.new_to_old.size(); ++i)
        out.old_to_new[out.new_to_old[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : w)
        for (int v : g.neighbor_list(u))
            if (u < v && w.contains(v))
                edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    std::ostringstream os;
    os << "parse error at line " << line_no << ": " << why;
    throw ParseError(os.str());
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "p") {
            if (n >= 0) parse_fail(line_no, "duplicate header");
            if (!(is >> n >> m) || n <= 0 || m < 0)
                parse_fail(line_no, "malformed header (expected 'p <n> <m>' with n >= 1)");
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before header");
            int u, v;
            if (!(is >> u >> v)) parse_fail(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line_no, "vertex id out of range");
            if (u == v) parse_fail(line_no, "self-loop");
            ++seen;
            if (seen > m) parse_fail(line_no, "more edges than declared");
            edges.emplace_back(u - 1, v - 1);
        } else {
            parse_fail(line_no, "unrecognized line");
        }
        std::string trailing;
        if (is >> trailing) parse_fail(line_no, "trailing tokens");
    }
    if (n < 0) throw ParseError("parse error: missing header");
    if (seen < m) {
        std::ostringstream os;
        os << "parse error: " << m << " edges declared but only " << seen << " present";
        throw ParseError(os.str());
    }
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

} // namespace equidom
