#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "relfrac/lp.hpp"

namespace relfrac {

// Returns a row violated by `primal`, or nullopt when none exists.
using SeparationOracle =
    std::function<std::optional<LpRow>(const std::vector<Rational>& primal)>;

struct CuttingPlaneOptions {
  int max_iterations = 10000;
};

struct CuttingPlaneResult {
  LpResult lp;                    // duals cover seed rows then generated rows
  std::vector<LpRow> generated;
  int iterations = 0;
};

// Solve, separate, add the row, repeat. Throws kNonconvergence past the
// iteration cap and kInvalidArgument if the oracle returns a row that the
// current primal satisfies.
CuttingPlaneResult cutting_plane_maximize(int dim,
                                          const std::vector<Rational>& objective,
                                          const std::vector<LpRow>& seed_rows,
                                          const SeparationOracle& separate,
                                          const CuttingPlaneOptions& options = {});

}  // namespace relfrac
