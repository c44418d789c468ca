#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equidom/graph.hpp"

namespace equidom {

Graph make_complete(int n);
Graph make_edgeless(int n);
Graph make_path(int n);
Graph make_cycle(int n);

// K_{2n}-ne: complete graph on 2n vertices minus the perfect matching
// (2i, 2i+1).
Graph make_k2n_minus_ne(int n);

// Attaches a pendant vertex n+v to every vertex v.
Graph make_corona(const Graph& g);

// Chain-join of two graphs across their universal-vertex sets. `nest` gives,
// per universal vertex of the first graph (ascending id), how many universal
// vertices of the second graph (ascending-id prefix) it connects to; prefixes
// of one order are nested, so any values make a chain graph. The second
// graph's ids are shifted by the first graph's vertex count.
Graph make_chain_join(const Graph& a, const Graph& b, const std::vector<int>& nest);

std::vector<int> universal_vertices(const Graph& g);

// Deterministic xorshift-style generator (SplitMix64), so seeds reproduce
// identical corpora on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// n vertices, m distinct edges sampled uniformly.
Graph make_random(int n, int m, std::uint64_t seed);

// Parses "d1,d2,..." (';' also accepted) into nesting counts.
std::vector<int> parse_nest_spec(const std::string& spec);

} // namespace equidom
