#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relfrac/graph.hpp"
#include "relfrac/homomorphism.hpp"

namespace relfrac {

struct ExpandOp {
  enum class Kind { kRemove, kClique, kEdge };
  Kind kind = Kind::kRemove;
  int v = -1;     // kRemove, kClique
  int size = 0;   // kClique
  int u = -1;     // kEdge
  int w = -1;     // kEdge

  static ExpandOp remove(int v) { return {Kind::kRemove, v, 0, -1, -1}; }
  static ExpandOp clique(int v, int size) { return {Kind::kClique, v, size, -1, -1}; }
  static ExpandOp edge(int u, int w) { return {Kind::kEdge, -1, 0, u, w}; }
  friend bool operator==(const ExpandOp&, const ExpandOp&) = default;
};

struct ExpandScript {
  std::vector<ExpandOp> ops;
  bool normal_form = false;
};

// Ops address vertices by label. The starting graph has labels 0..n-1; a
// clique replacement retires its label and appends `size` fresh labels.
struct ExpandResult {
  Graph graph;                 // live labels in increasing order, renumbered
  std::vector<int> labels;     // final id -> label
  std::vector<int> origin;     // final id -> starting vertex it descends from
};

// Throws ScriptError naming the failing step.
ExpandResult apply_expand(const Graph& h, const ExpandScript& script);

struct ExpandCertificate {
  ExpandScript script;
  std::vector<int> label_of;  // vertex of g -> label in the final graph
};

// g ∈ Expand(h)? A certificate is a homomorphism complement(g) ->
// complement(h), turned into a normal-form script. nullopt after an
// exhaustive search; kUndecided when a cap is hit.
std::optional<ExpandCertificate> in_expand_certificate(const Graph& h, const Graph& g,
                                                       const HomOptions& options = {});
std::optional<ExpandScript> in_expand(const Graph& h, const Graph& g,
                                      const HomOptions& options = {});

// Necessary condition: integers s(v) >= 0 summing to |V(g)| with at most
// ω(g) on every maximal clique of h.
bool expand_feasibility_prefilter(const Graph& h, const Graph& g);

struct DerivedExpand {
  Graph g_prime;
  Graph h_prime;
  ExpandScript script;
  std::vector<int> g_vertices;  // ids in g of the vertices of g_prime
  std::vector<int> h_vertices;  // ids in h of the vertices of h_prime
};

// From an independent set of complement(g) ⊠ h, rebuild the used part of g
// from the used part of h. The script is checked by replay.
DerivedExpand derive_expand_from_independent_set(const Graph& g, const Graph& h,
                                                 const VertexSet& s);

// Minimum clique cover; returned only when its size equals α(g).
std::optional<std::vector<VertexSet>> clique_partition_perfect(const Graph& g,
                                                               double timeout_seconds = 300.0);

// Does the replayed script produce exactly g, with vertex v of g landing on
// label label_of[v]?
bool replay_matches(const Graph& h, const Graph& g, const ExpandCertificate& cert);

}  // namespace relfrac
