#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relfrac/vertex_set.hpp"

namespace relfrac {

// Provenance of a graph. Constructor kinds can be rebuilt from their
// parameters; derived kinds only record the operation that produced them.
struct Family {
  enum class Kind { kCycle, kCayleyCyclic, kJohnson3, kComplete, kDerived };

  Kind kind = Kind::kDerived;
  int n = 0;
  int k = 0;
  std::string op;
  std::vector<std::shared_ptr<const Family>> parents;

  static Family cycle(int n) { return {Kind::kCycle, n, 1, {}, {}}; }
  static Family cayley(int n, int k) { return {Kind::kCayleyCyclic, n, k, {}, {}}; }
  static Family johnson3(int n) { return {Kind::kJohnson3, n, 0, {}, {}}; }
  static Family complete(int n) { return {Kind::kComplete, n, 0, {}, {}}; }

  bool is_constructor() const { return kind != Kind::kDerived; }
  // Interval circulant parameters (n, k) when the family is a cycle or a
  // cyclic Cayley graph.
  std::optional<std::pair<int, int>> circulant() const;
  // "cycle:7", "cayley:10:2", "johnson3:6", "complete:4", "sprod(a,b)".
  std::string str() const;
};

class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].count(); }
  int num_edges() const;
  // Sorted pairs (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const;
  VertexSet all_vertices() const { return VertexSet::full(n()); }

  const std::optional<Family>& family() const { return family_; }
  // Cached vertex-transitivity, if known.
  std::optional<bool> vt_known() const;
  void set_vt_known(bool value) const;

  Graph with_family(Family f) const;
  Graph without_family() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

  // Only for use while a graph is being assembled.
  void add_edge(int u, int v);

 private:
  std::vector<VertexSet> adj_;
  std::optional<Family> family_;
  std::shared_ptr<std::atomic<int>> vt_cache_;
};

Graph make_cycle(int n);
Graph make_cayley_cyclic(int n, int k);
Graph make_johnson3(int n);
Graph make_complete(int n);
Graph make_edgeless(int n);
Graph make_path(int n);
// Rebuilds a constructor family; throws for derived families.
Graph realize_family(const Family& f);

// The 3-subsets of {0..n-1} in lexicographic order, matching the vertex ids
// of make_johnson3(n).
std::vector<std::array<int, 3>> johnson3_subsets(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
// Vertex (i, j) has id i * h.n() + j.
Graph strong_product(const Graph& g, const Graph& h);
Graph strong_power(const Graph& g, int d);
Graph disjunctive_product(const Graph& g, const Graph& h);
// Vertices keep the order given in `vertices`.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
// Throws kInvalidArgument when s or t is not independent.
bool are_disconnected(const Graph& g, const VertexSet& s, const VertexSet& t);

}  // namespace relfrac
