#pragma once

#include <vector>

#include "relfrac/rational.hpp"

namespace relfrac {

// coeffs · x <= rhs
struct LpRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// maximize objective · x subject to rows, x >= 0.
struct LinearProgram {
  int dim = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

const char* lp_status_name(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;  // one entry per row
  int pivots = 0;
};

// Dictionary-form simplex with Bland's rule and a two-phase start. At an
// optimum the result is checked for primal/dual feasibility and equal
// objective values; any failure throws kInternalInconsistency.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace relfrac
