#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relfrac/graph.hpp"

namespace relfrac {

struct Homomorphism {
  std::vector<int> map;  // source vertex -> target vertex
};

bool is_homomorphism(const Graph& source, const Graph& target,
                     const std::vector<int>& map);

struct HomOptions {
  double timeout_seconds = 300.0;
  std::uint64_t max_nodes = 200'000'000;
};

struct HomSearchStats {
  std::uint64_t nodes = 0;
};

// Backtracking with forward checking. Returns nullopt only after an
// exhaustive search; throws kUndecided when a cap is hit.
std::optional<Homomorphism> find_homomorphism(const Graph& h, const Graph& g,
                                              const HomOptions& options = {},
                                              HomSearchStats* stats = nullptr);

// Cay(Z_m, ±1..±k) -> Cay(Z_n, ±1..±k) for m = l*n + s*(k+1), 2k < n < m:
// x < l*n maps to x mod n, the rest to (x - l*n) mod (k+1).
Homomorphism cayley_homomorphism(int n, int m, int k, int ell, int s);

}  // namespace relfrac
