#include "relfrac/independence_graph.hpp"

#include "relfrac/cliques.hpp"
#include "relfrac/error.hpp"

namespace relfrac {

namespace {

bool disconnected_unchecked(const Graph& g, const VertexSet& s, const VertexSet& t) {
  return !s.intersects(t) && is_independent(g, s | t);
}

}  // namespace

IndependenceGraphInfo independence_graph(const Graph& g,
                                         const IndependenceGraphOptions& options) {
  if (g.n() > options.max_vertices) {
    throw Error(ErrorKind::kSizeLimit,
                "independence graph limited to " +
                    std::to_string(options.max_vertices) + " vertices");
  }
  IndependenceGraphInfo info;
  info.set_of = enumerate_independent_sets(g, options.max_sets);
  for (const auto& s : info.set_of) info.nv.push_back(s.count());
  info.gstar = independence_graph_induced(g, info.set_of);
  return info;
}

Graph independence_graph_induced(const Graph& g, const std::vector<VertexSet>& sets) {
  const int k = static_cast<int>(sets.size());
  for (const auto& s : sets) {
    if (s.universe() != g.n() || !is_independent(g, s)) {
      throw Error(ErrorKind::kInvalidArgument, "set " + s.str() + " is not independent");
    }
  }
  Graph star(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (!disconnected_unchecked(g, sets[a], sets[b])) star.add_edge(a, b);
    }
  }
  return star;
}

}  // namespace relfrac
