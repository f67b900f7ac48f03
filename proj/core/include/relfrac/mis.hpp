#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relfrac/graph.hpp"
#include "relfrac/rational.hpp"

namespace relfrac {

using WeightMap = std::vector<Rational>;

struct MisOptions {
  // Wall-clock budget in seconds; <= 0 disables the limit.
  double timeout_seconds = 300.0;
  int threads = 1;
  // Return the lexicographically least optimal witness (by sorted id list).
  // Turning this off keeps single-threaded results deterministic but lets
  // multi-threaded runs return any optimal witness.
  bool canonical_witness = true;
  // Stop as soon as a set of at least this value is found.
  std::optional<Rational> stop_at;
  // Starting incumbent; must be independent.
  std::optional<VertexSet> initial;
  // Caller asserts g is vertex-transitive and all weights are equal, which
  // allows fixing vertex 0 into the solution.
  bool assume_vertex_transitive = false;
};

struct MisStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct MisResult {
  Rational value;
  VertexSet witness;
  MisStats stats;
  int size() const { return witness.count(); }
};

MisResult max_independent_set(const Graph& g, const MisOptions& options = {});
MisResult max_weight_independent_set(const Graph& g, const WeightMap& w,
                                     const MisOptions& options = {});
// Exhaustive scan over all subsets; n <= 20.
MisResult brute_force_mis(const Graph& g);
// Greedy minimum-degree independent set; a cheap lower bound.
VertexSet greedy_independent_set(const Graph& g);

struct LocalSearchOptions {
  long iterations = 200'000;
  std::uint32_t seed = 1;
  // Stop once the set reaches this size.
  std::optional<int> target;
  double timeout_seconds = 30.0;
};

// Iterated local search: random forced insertions followed by (1,2)-swaps.
// Fixed seed, so repeated calls agree. Never smaller than `start`.
VertexSet local_search_independent_set(const Graph& g, const VertexSet& start,
                                       const LocalSearchOptions& options = {});

}  // namespace relfrac
