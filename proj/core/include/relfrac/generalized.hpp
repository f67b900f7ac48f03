#pragma once

#include <optional>
#include <vector>

#include "relfrac/graph.hpp"

namespace relfrac {

struct GenIndResult {
  int k = 0;
  long value = 0;
  std::vector<int> multiplicities;
  std::uint64_t nodes = 0;
};

struct GenIndOptions {
  int cap = 40;
  double timeout_seconds = 300.0;
  // Stop once a solution of at least this value is found.
  std::optional<long> stop_at;
};

// max sum_v x_v over integers x_v >= 0 with sum_{v in C} x_v <= k for every
// maximal clique C.
GenIndResult generalized_independence(const Graph& g, int k,
                                      const GenIndOptions& options = {});

}  // namespace relfrac
