#pragma once

#include <functional>
#include <vector>

#include "relfrac/graph.hpp"

namespace relfrac {

constexpr int kDefaultEnumerationCap = 40;

// Bron-Kerbosch with Tomita pivoting. Each maximal clique is reported once,
// in a deterministic order. The callback returns false to stop early.
void for_each_maximal_clique(const Graph& g,
                             const std::function<bool(const VertexSet&)>& visit,
                             int cap = kDefaultEnumerationCap);
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 int cap = kDefaultEnumerationCap);

void for_each_maximal_independent_set(
    const Graph& g, const std::function<bool(const VertexSet&)>& visit,
    int cap = kDefaultEnumerationCap);
std::vector<VertexSet> enumerate_maximal_independent_sets(
    const Graph& g, int cap = kDefaultEnumerationCap);

// Every independent set, including the empty set, in increasing order of
// the bitmask. Throws kSizeLimit beyond `max_sets`.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g,
                                                  std::size_t max_sets);

int clique_number(const Graph& g);

// Exact minimum coloring by DSATUR branch and bound: color[v] in 0..k-1.
std::vector<int> exact_coloring(const Graph& g, double timeout_seconds = 300.0);

}  // namespace relfrac
