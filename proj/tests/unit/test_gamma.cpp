#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "relfrac/error.hpp"
#include "relfrac/relfrac.hpp"

using namespace relfrac;

namespace {

// max over all assignments of min |f(v)|
int brute_t(const Graph& g, const Graph& h) {
  int best = 0;
  oracle::for_each_assignment(g, h, [&](const std::vector<std::uint32_t>& f) {
    int lo = h.n() + 1;
    for (auto m : f) lo = std::min(lo, std::popcount(m));
    best = std::max(best, lo);
  });
  return best;
}

}  // namespace

TEST(Gamma0, Examples) {
  auto a = gamma0(make_cycle(3), make_johnson3(6));
  EXPECT_EQ(a.extent, Extent::kFinite);
  EXPECT_EQ(a.value, Rational(1, 4));
  ASSERT_TRUE(a.best_assignment.has_value());
  EXPECT_TRUE(is_valid_assignment(make_cycle(3), make_johnson3(6), *a.best_assignment));
  for (const Graph& g : {make_cycle(5), make_path(4), make_johnson3(5)})
    EXPECT_EQ(gamma0(g, g).value, Rational(1));
}

TEST(Gamma0, InfiniteWhenNoFullAssignment) {
  // two non-adjacent vertices of g need disjoint images in K1
  auto r = gamma0(make_edgeless(2), make_complete(1));
  EXPECT_EQ(r.extent, Extent::kInfinite);
  EXPECT_FALSE(r.best_assignment.has_value());
}

TEST(Gamma0, MatchesBruteForce) {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1, 5), h = oracle::random_graph(rng, 1, 5);
    const int want = brute_t(g, h);
    auto r = gamma0(g, h);
    if (want == 0) {
      EXPECT_EQ(r.extent, Extent::kInfinite) << t;
    } else {
      ASSERT_EQ(r.extent, Extent::kFinite) << t;
      EXPECT_EQ(r.value, Rational(1, want)) << t;
      ASSERT_TRUE(r.best_assignment.has_value());
      EXPECT_TRUE(is_valid_assignment(g, h, *r.best_assignment));
      EXPECT_GE(r.best_assignment->min_size(), want);
    }
  }
}

TEST(Gamma0, NodeCapIsUndecided) {
  Gamma0Options o;
  o.max_nodes = 3;
  try {
    gamma0(make_cycle(8), make_johnson3(15), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUndecided);
  }
}

TEST(Gamma1, Examples) {
  auto self = gamma1_certificate(make_cycle(5), make_cycle(5));
  EXPECT_EQ(self.value, Rational(1));
  auto tri = gamma1_certificate(make_cycle(3), make_johnson3(6));
  EXPECT_EQ(tri.value, Rational(1, 4));
  EXPECT_NO_THROW(verify_distribution(make_cycle(3), make_johnson3(6), tri.distribution,
                                      tri.value));
}

TEST(Gamma1, NonTransitiveUsesLpDuals) {
  Graph g = make_path(4), h = make_cycle(5);
  auto r = gamma1_certificate(g, h);
  EXPECT_EQ(r.value, relfrac_lp(g, h).value);
  EXPECT_NO_THROW(verify_distribution(g, h, r.distribution, r.value));
}

TEST(Gamma1, ChainWithGamma0) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(rng, 1, 5), h = oracle::random_graph(rng, 1, 5);
    auto g1 = gamma1_certificate(g, h);
    auto g0 = gamma0(g, h);
    EXPECT_LE(Rational(oracle::alpha(g), oracle::alpha(h)), g1.value);
    if (g0.extent == Extent::kFinite) EXPECT_LE(g1.value, g0.value);
  }
}

TEST(Gamma1, RejectsBadDistribution) {
  Graph g = make_cycle(5);
  AssignmentF id;
  for (int v = 0; v < 5; ++v) id.sets.push_back(VertexSet(5, {v}));
  std::vector<DualTerm> half{{id, Rational(1, 2)}};
  EXPECT_THROW(verify_distribution(g, g, half, Rational(1)), Error);
  std::vector<DualTerm> whole{{id, Rational(1)}};
  EXPECT_NO_THROW(verify_distribution(g, g, whole, Rational(1)));
  EXPECT_THROW(verify_distribution(g, g, whole, Rational(1, 2)), Error);
}
