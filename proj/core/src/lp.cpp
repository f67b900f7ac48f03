#include "relfrac/lp.hpp"

#include <algorithm>

#include "relfrac/error.hpp"

namespace relfrac {

const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

// basic[i] = b[i] - sum_j a[i][j] * nonbasic[j];  z = z0 + sum_j c[j] * nonbasic[j]
struct Dictionary {
  int m = 0;
  int ncols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  Rational z0;
  std::vector<int> basic;
  std::vector<int> nonbasic;
  int pivots = 0;

  void pivot(int row, int col) {
    ++pivots;
    const Rational inv = a[row][col].reciprocal();
    auto& r = a[row];
    b[row] *= inv;
    for (int j = 0; j < ncols; ++j) {
      if (j != col) r[j] *= inv;
    }
    r[col] = inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      b[i] -= f * b[row];
      for (int j = 0; j < ncols; ++j) {
        if (j == col) continue;
        if (!r[j].is_zero()) a[i][j] -= f * r[j];
      }
      a[i][col] = -(f * inv);
    }
    if (!c[col].is_zero()) {
      const Rational f = c[col];
      z0 += f * b[row];
      for (int j = 0; j < ncols; ++j) {
        if (j != col && !r[j].is_zero()) c[j] -= f * r[j];
      }
      c[col] = -(f * inv);
    }
    std::swap(basic[row], nonbasic[col]);
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize() {
    while (true) {
      int col = -1;
      for (int j = 0; j < ncols; ++j) {
        if (c[j].sign() > 0 && (col < 0 || nonbasic[j] < nonbasic[col])) col = j;
      }
      if (col < 0) return true;
      int row = -1;
      Rational best_ratio;
      for (int i = 0; i < m; ++i) {
        if (a[i][col].sign() <= 0) continue;
        Rational ratio = b[i] / a[i][col];
        if (row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic[i] < basic[row])) {
          row = i;
          best_ratio = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

void verify(const LinearProgram& lp, const LpResult& r) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInternalInconsistency, "LP certificate: " + what);
  };
  Rational primal_value;
  for (int j = 0; j < lp.dim; ++j) {
    if (r.primal[j].sign() < 0) fail("negative primal");
    primal_value += lp.objective[j] * r.primal[j];
  }
  Rational dual_value;
  std::vector<Rational> reduced(lp.objective.begin(), lp.objective.end());
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    Rational lhs;
    for (int j = 0; j < lp.dim; ++j) lhs += row.coeffs[j] * r.primal[j];
    if (lhs > row.rhs) fail("row " + std::to_string(i) + " violated");
    if (r.dual[i].sign() < 0) fail("negative dual");
    if (!r.dual[i].is_zero() && lhs != row.rhs) fail("complementary slackness");
    dual_value += r.dual[i] * row.rhs;
    for (int j = 0; j < lp.dim; ++j) reduced[j] -= r.dual[i] * row.coeffs[j];
  }
  for (int j = 0; j < lp.dim; ++j) {
    if (reduced[j].sign() > 0) fail("dual infeasible");
  }
  if (primal_value != r.value || dual_value != r.value) fail("objective mismatch");
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const int n = lp.dim;
  const int m = static_cast<int>(lp.rows.size());
  if (static_cast<int>(lp.objective.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "objective width mismatch");
  }
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      throw Error(ErrorKind::kInvalidArgument, "row width mismatch");
    }
  }
  // Variables: 0..n-1 structural, n..n+m-1 slacks, n+m auxiliary.
  Dictionary d;
  d.m = m;
  bool need_phase1 = false;
  for (const auto& row : lp.rows) need_phase1 |= row.rhs.sign() < 0;
  d.ncols = n + (need_phase1 ? 1 : 0);
  d.a.assign(m, std::vector<Rational>(d.ncols));
  d.b.resize(m);
  d.c.assign(d.ncols, Rational());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) d.a[i][j] = lp.rows[i].coeffs[j];
    d.b[i] = lp.rows[i].rhs;
    d.basic.push_back(n + i);
  }
  for (int j = 0; j < n; ++j) d.nonbasic.push_back(j);

  LpResult result;
  if (need_phase1) {
    const int aux = n + m;
    const int aux_col = n;
    d.nonbasic.push_back(aux);
    for (int i = 0; i < m; ++i) d.a[i][aux_col] = Rational(-1);
    d.c[aux_col] = Rational(-1);
    int row = 0;
    for (int i = 1; i < m; ++i) {
      if (d.b[i] < d.b[row] || (d.b[i] == d.b[row] && d.basic[i] < d.basic[row])) {
        row = i;
      }
    }
    d.pivot(row, aux_col);
    d.optimize();
    if (d.z0.sign() < 0) {
      result.status = LpStatus::kInfeasible;
      result.pivots = d.pivots;
      return result;
    }
    // Drive the auxiliary variable out of the basis if it is still there.
    for (int i = 0; i < m; ++i) {
      if (d.basic[i] != aux) continue;
      int col = -1;
      for (int j = 0; j < d.ncols; ++j) {
        if (!d.a[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "auxiliary variable stuck in basis");
      }
      d.pivot(i, col);
    }
    int col_aux = static_cast<int>(
        std::find(d.nonbasic.begin(), d.nonbasic.end(), aux) - d.nonbasic.begin());
    for (auto& r : d.a) r.erase(r.begin() + col_aux);
    d.nonbasic.erase(d.nonbasic.begin() + col_aux);
    d.ncols -= 1;
    // Rewrite the true objective over the current nonbasic variables.
    d.c.assign(d.ncols, Rational());
    d.z0 = Rational();
    for (int j = 0; j < d.ncols; ++j) {
      if (d.nonbasic[j] < n) d.c[j] += lp.objective[d.nonbasic[j]];
    }
    for (int i = 0; i < m; ++i) {
      if (d.basic[i] >= n) continue;
      const Rational& f = lp.objective[d.basic[i]];
      if (f.is_zero()) continue;
      d.z0 += f * d.b[i];
      for (int j = 0; j < d.ncols; ++j) d.c[j] -= f * d.a[i][j];
    }
  } else {
    for (int j = 0; j < n; ++j) d.c[j] = lp.objective[j];
  }

  if (!d.optimize()) {
    result.status = LpStatus::kUnbounded;
    result.pivots = d.pivots;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = d.z0;
  result.primal.assign(n, Rational());
  result.dual.assign(m, Rational());
  for (int i = 0; i < m; ++i) {
    if (d.basic[i] < n) result.primal[d.basic[i]] = d.b[i];
  }
  for (int j = 0; j < d.ncols; ++j) {
    int var = d.nonbasic[j];
    if (var >= n && var < n + m) result.dual[var - n] = -d.c[j];
  }
  result.pivots = d.pivots;
  verify(lp, result);
  return result;
}

}  // namespace relfrac
