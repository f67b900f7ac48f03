#include <gtest/gtest.h>

#include <random>

#include "relfrac/error.hpp"
#include "relfrac/lp.hpp"

using namespace relfrac;

namespace {

LpRow row(std::vector<Rational> c, Rational rhs) { return {std::move(c), std::move(rhs)}; }

void check_optimal(const LinearProgram& lp, const LpResult& r) {
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  Rational obj(0), dual_obj(0);
  for (int j = 0; j < lp.dim; ++j) {
    EXPECT_GE(r.primal[j], Rational(0));
    obj += lp.objective[j] * r.primal[j];
  }
  EXPECT_EQ(obj, r.value);
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    Rational lhs(0);
    for (int j = 0; j < lp.dim; ++j) lhs += lp.rows[i].coeffs[j] * r.primal[j];
    EXPECT_LE(lhs, lp.rows[i].rhs);
    EXPECT_GE(r.dual[i], Rational(0));
    if (lhs < lp.rows[i].rhs) EXPECT_EQ(r.dual[i], Rational(0));
    dual_obj += r.dual[i] * lp.rows[i].rhs;
  }
  EXPECT_EQ(dual_obj, r.value);
  for (int j = 0; j < lp.dim; ++j) {
    Rational s(0);
    for (size_t i = 0; i < lp.rows.size(); ++i) s += r.dual[i] * lp.rows[i].coeffs[j];
    EXPECT_GE(s, lp.objective[j]);
  }
}

}  // namespace

TEST(Lp, Examples) {
  LinearProgram a{1, {1}, {row({1}, 1)}};
  auto ra = solve_lp(a);
  EXPECT_EQ(ra.status, LpStatus::kOptimal);
  EXPECT_EQ(ra.value, Rational(1));

  LinearProgram b{2, {1, 1}, {row({1, 1}, 1)}};
  auto rb = solve_lp(b);
  EXPECT_EQ(rb.value, Rational(1));
  EXPECT_EQ(rb.dual[0], Rational(1));

  LinearProgram c{1, {1}, {}};
  EXPECT_EQ(solve_lp(c).status, LpStatus::kUnbounded);
}

TEST(Lp, Infeasible) {
  // x <= -1 with x >= 0
  LinearProgram lp{1, {1}, {row({1}, -1)}};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(Lp, NegativeRhsFeasible) {
  // max -x - y s.t. -x - y <= -2, x <= 3  -> value -2
  LinearProgram lp{2, {-1, -1}, {row({-1, -1}, -2), row({1, 0}, 3)}};
  auto r = solve_lp(lp);
  EXPECT_EQ(r.value, Rational(-2));
  check_optimal(lp, r);
}

TEST(Lp, FractionalOptimum) {
  // C5 fractional independence: 5/2
  LinearProgram lp;
  lp.dim = 5;
  lp.objective.assign(5, Rational(1));
  for (int i = 0; i < 5; ++i) {
    std::vector<Rational> c(5, Rational(0));
    c[i] = 1;
    c[(i + 1) % 5] = 1;
    lp.rows.push_back(row(c, 1));
  }
  auto r = solve_lp(lp);
  EXPECT_EQ(r.value, Rational(5, 2));
  check_optimal(lp, r);
}

TEST(Lp, Degenerate) {
  // many rows through the same vertex
  LinearProgram lp{2, {1, 1}, {row({1, 0}, 1), row({0, 1}, 1), row({1, 1}, 2),
                               row({2, 1}, 3), row({1, 2}, 3)}};
  auto r = solve_lp(lp);
  EXPECT_EQ(r.value, Rational(2));
  check_optimal(lp, r);
}

TEST(Lp, RandomCertificatesHold) {
  std::mt19937_64 rng(23);
  int optimal = 0;
  for (int t = 0; t < 200; ++t) {
    LinearProgram lp;
    lp.dim = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < lp.dim; ++j) lp.objective.emplace_back(static_cast<long>(rng() % 7) - 2);
    const int m = static_cast<int>(rng() % 7);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> c;
      for (int j = 0; j < lp.dim; ++j) c.emplace_back(static_cast<long>(rng() % 9) - 3, 1 + static_cast<long>(rng() % 3));
      lp.rows.push_back(row(c, Rational(static_cast<long>(rng() % 11) - 2)));
    }
    auto r = solve_lp(lp);
    auto again = solve_lp(lp);
    EXPECT_EQ(r.pivots, again.pivots);
    if (r.status == LpStatus::kOptimal) {
      ++optimal;
      check_optimal(lp, r);
    }
  }
  EXPECT_GT(optimal, 50);
}

TEST(Lp, RejectsRaggedRows) {
  LinearProgram lp{2, {1, 1}, {row({1}, 1)}};
  EXPECT_THROW(solve_lp(lp), Error);
}
