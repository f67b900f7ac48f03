#include "relfrac/cutting_plane.hpp"

#include "relfrac/error.hpp"

namespace relfrac {

CuttingPlaneResult cutting_plane_maximize(int dim,
                                          const std::vector<Rational>& objective,
                                          const std::vector<LpRow>& seed_rows,
                                          const SeparationOracle& separate,
                                          const CuttingPlaneOptions& options) {
  LinearProgram lp;
  lp.dim = dim;
  lp.objective = objective;
  lp.rows = seed_rows;
  CuttingPlaneResult out;
  while (true) {
    out.lp = solve_lp(lp);
    if (out.lp.status != LpStatus::kOptimal) return out;
    auto row = separate(out.lp.primal);
    if (!row) return out;
    Rational lhs;
    for (int j = 0; j < dim; ++j) lhs += row->coeffs.at(j) * out.lp.primal[j];
    if (lhs <= row->rhs) {
      throw Error(ErrorKind::kInvalidArgument,
                  "separation oracle returned a satisfied row");
    }
    if (++out.iterations > options.max_iterations) {
      throw Error(ErrorKind::kNonconvergence,
                  "cutting plane exceeded " +
                      std::to_string(options.max_iterations) + " iterations");
    }
    lp.rows.push_back(*row);
    out.generated.push_back(std::move(*row));
  }
}

}  // namespace relfrac
