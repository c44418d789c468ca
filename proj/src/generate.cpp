#include "equidom/generate.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "equidom/errors.hpp"

namespace equidom {

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_edgeless(int n) { return Graph(n, {}); }

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph make_k2n_minus_ne(int n) {
    if (n < 1) throw std::invalid_argument("k2n-ne needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    return Graph(2 * n, edges);
}

Graph make_corona(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    return Graph(2 * n, edges);
}

std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
    return out;
}

Graph make_chain_join(const Graph& a, const Graph& b, const std::vector<int>& nest) {
    std::vector<int> ua = universal_vertices(a);
    std::vector<int> ub = universal_vertices(b);
    if (nest.size() > ua.size())
        throw std::invalid_argument("nesting spec longer than the universal set");
    for (int d : nest)
        if (d < 0 || d > static_cast<int>(ub.size()))
            throw std::invalid_argument("nesting count out of range");
    int shift = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    for (size_t i = 0; i < nest.size(); ++i)
        for (int j = 0; j < nest[i]; ++j) edges.emplace_back(ua[i], ub[j] + shift);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

std::uint64_t Rng::next() {
    // SplitMix64 step.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph make_random(int n, int m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw std::invalid_argument("edge count out of range");
    Rng rng(seed);
    std::set<std::pair<int, int>> picked;
    while (static_cast<int>(picked.size()) < m) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        picked.emplace(u, v);
    }
    return Graph(n, {picked.begin(), picked.end()});
}

std::vector<int> parse_nest_spec(const std::string& spec) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            out.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw ParseError("invalid nesting spec near '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : spec) {
        if (c == ',' || c == ';') {
            flush();
        } else if (c == ' ') {
            continue;
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

} // namespace equidom
