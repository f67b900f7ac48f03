#pragma once

#include <vector>

#include "relfrac/graph.hpp"

namespace relfrac {

struct IndependenceGraphInfo {
  Graph gstar;
  std::vector<VertexSet> set_of;
  std::vector<int> nv;
};

struct IndependenceGraphOptions {
  int max_vertices = 20;
  std::size_t max_sets = 16384;
};

// Vertices are the independent sets of g (the empty set included); two
// distinct sets are adjacent unless they are disconnected.
IndependenceGraphInfo independence_graph(const Graph& g,
                                         const IndependenceGraphOptions& options = {});

// The graph induced on `sets` inside the independence graph of g.
Graph independence_graph_induced(const Graph& g, const std::vector<VertexSet>& sets);

}  // namespace relfrac
