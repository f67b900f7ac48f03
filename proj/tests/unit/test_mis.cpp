#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "relfrac/error.hpp"
#include "relfrac/mis.hpp"

using namespace relfrac;

namespace {

int mis(const Graph& g) { return max_independent_set(g).size(); }

Graph petersen() {
  Graph p(10);
  for (int i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(5 + i, 5 + (i + 2) % 5);
    p.add_edge(i, 5 + i);
  }
  return p;
}

}  // namespace

TEST(Mis, KnownValues) {
  EXPECT_EQ(mis(make_cycle(5)), 2);
  EXPECT_EQ(mis(strong_product(make_cycle(5), make_cycle(5))), 5);
  EXPECT_EQ(mis(strong_product(make_cycle(7), make_cycle(5))), 7);
  EXPECT_EQ(mis(make_johnson3(6)), 4);
  EXPECT_EQ(mis(Graph(0)), 0);
  EXPECT_EQ(max_independent_set(Graph(0)).value, Rational(0));
}

TEST(Mis, BruteForceKnownValues) {
  EXPECT_EQ(brute_force_mis(make_cycle(5)).size(), 2);
  EXPECT_EQ(brute_force_mis(make_cycle(7)).size(), 3);
  EXPECT_EQ(brute_force_mis(petersen()).size(), 4);
  EXPECT_THROW(brute_force_mis(Graph(21)), Error);
}

TEST(Mis, WitnessIsIndependentAndLexLeast) {
  Graph c5 = make_cycle(5);
  auto r = max_independent_set(c5);
  EXPECT_EQ(r.witness, VertexSet(5, {0, 2}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    Graph g = oracle::random_graph(rng, 0, 16);
    auto fast = max_independent_set(g);
    auto slow = brute_force_mis(g);
    ASSERT_EQ(fast.value, slow.value) << t;
    EXPECT_EQ(fast.value, Rational(oracle::alpha(g)));
    EXPECT_TRUE(is_independent(g, fast.witness));
    EXPECT_EQ(fast.witness, slow.witness) << t;
  }
}

TEST(Mis, Weighted) {
  Graph c5 = make_cycle(5);
  std::vector<Rational> ones(5, Rational(1));
  EXPECT_EQ(max_weight_independent_set(c5, ones).value, Rational(2));
  std::vector<Rational> zeros(5, Rational(0));
  auto z = max_weight_independent_set(c5, zeros);
  EXPECT_EQ(z.value, Rational(0));
  EXPECT_TRUE(z.witness.empty());
  std::vector<Rational> w{1, 1, 1, 1, 3};
  auto r = max_weight_independent_set(c5, w);
  EXPECT_EQ(r.value, Rational(4));
  EXPECT_TRUE(r.witness.contains(4));
}

TEST(Mis, WeightedMatchesEnumeration) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_graph(rng, 1, 12);
    std::vector<Rational> w;
    for (int v = 0; v < g.n(); ++v) w.emplace_back(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
    Rational best(0);
    for (auto m : oracle::independent_masks(g)) {
      Rational s(0);
      for (int v = 0; v < g.n(); ++v)
        if (m >> v & 1) s += w[v];
      if (s > best) best = s;
    }
    auto r = max_weight_independent_set(g, w);
    EXPECT_EQ(r.value, best);
    Rational s(0);
    r.witness.for_each([&](int v) { s += w[v]; });
    EXPECT_EQ(s, best);
    EXPECT_TRUE(is_independent(g, r.witness));
  }
}

TEST(Mis, HugeWeightsUseBigIntegers) {
  Graph c5 = make_cycle(5);
  mpz_class big("1000000000000000000000000");
  std::vector<Rational> w(5, Rational(big, mpz_class(7)));
  w[4] = Rational(big, mpz_class(3));
  auto r = max_weight_independent_set(c5, w);
  // {1,4} or {2,4}: big/7 + big/3
  EXPECT_EQ(r.value, Rational(big, mpz_class(7)) + Rational(big, mpz_class(3)));
}

TEST(Mis, NegativeWeightRejected) {
  std::vector<Rational> w{1, -1, 1};
  EXPECT_THROW(max_weight_independent_set(make_path(3), w), Error);
}

TEST(Mis, Monotonicity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(rng, 2, 12);
    const int a = mis(g);
    int u = static_cast<int>(rng() % g.n()), v = static_cast<int>(rng() % g.n());
    if (u != v && !g.adjacent(u, v)) {
      Graph more = g;
      more.add_edge(u, v);
      EXPECT_LE(mis(more), a);
    }
    std::vector<int> keep;
    for (int x = 0; x < g.n(); ++x)
      if (x != u) keep.push_back(x);
    EXPECT_LE(mis(induced_subgraph(g, keep)), a);
  }
}

TEST(Mis, UnionAndProduct) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1, 10), h = oracle::random_graph(rng, 1, 10);
    EXPECT_EQ(mis(disjoint_union(g, h)), mis(g) + mis(h));
    if (g.n() * h.n() <= 49) {
      EXPECT_GE(mis(strong_product(g, h)), mis(g) * mis(h));
      EXPECT_EQ(mis(strong_product(g, make_complete(3))), mis(g));
    }
  }
}

TEST(Mis, ThreadsGiveSameWitness) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(rng, 20, 45);
    MisOptions one, many;
    many.threads = 4;
    auto a = max_independent_set(g, one);
    auto b = max_independent_set(g, many);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
  Graph p = strong_product(make_cycle(7), make_cycle(7));
  MisOptions many;
  many.threads = 4;
  EXPECT_EQ(max_independent_set(p, many).witness, max_independent_set(p).witness);
}

TEST(Mis, TimeoutCarriesBound) {
  Graph big = strong_product(make_cycle(9), make_johnson3(9));
  MisOptions o;
  o.timeout_seconds = 0.05;
  try {
    max_independent_set(big, o);
    GTEST_SKIP() << "solved within the budget";
  } catch (const TimeoutError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTimeout);
    EXPECT_GT(e.best_lower_bound(), Rational(0));
  }
}

TEST(Mis, VertexTransitiveHint) {
  for (const Graph& g : {make_cycle(9), make_johnson3(7), make_cayley_cyclic(13, 3)}) {
    MisOptions o;
    o.assume_vertex_transitive = true;
    EXPECT_EQ(max_independent_set(g, o).value, max_independent_set(g).value);
  }
}

TEST(Mis, CycleProductFormula) {
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= j; ++k)
      EXPECT_EQ(mis(strong_product(make_cycle(2 * j + 1), make_cycle(2 * k + 1))),
                j * k + k / 2)
          << j << " " << k;
}

TEST(Mis, LocalSearchNeverExceedsOptimum) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1, 14);
    LocalSearchOptions o;
    o.iterations = 500;
    VertexSet s = local_search_independent_set(g, VertexSet(g.n()), o);
    EXPECT_TRUE(is_independent(g, s));
    EXPECT_LE(s.count(), oracle::alpha(g));
  }
}

TEST(Mis, LocalSearchKeepsStartAndIsRepeatable) {
  Graph p = strong_product(complement(make_cycle(7)), make_johnson3(14));
  VertexSet start(p.n());
  start.insert(0);
  LocalSearchOptions o;
  o.target = 28;
  VertexSet a = local_search_independent_set(p, start, o);
  VertexSet b = local_search_independent_set(p, start, o);
  EXPECT_EQ(a.count(), 28);
  EXPECT_TRUE(is_independent(p, a));
  EXPECT_EQ(a.to_vector(), b.to_vector());
  VertexSet bad(p.n());
  bad.insert(0);
  bad.insert(p.neighbors(0).first());
  EXPECT_THROW(local_search_independent_set(p, bad), Error);
}

TEST(Mis, IncumbentAtStopValueIsReturned) {
  // Vertex-transitive hint fixes vertex 0, which the incumbent avoids.
  Graph c = make_cycle(9);
  VertexSet s(9);
  for (int v : {1, 3, 5, 7}) s.insert(v);
  MisOptions o;
  o.assume_vertex_transitive = true;
  o.initial = s;
  o.stop_at = Rational(4);
  MisResult r = max_independent_set(c, o);
  EXPECT_EQ(r.witness.to_vector(), s.to_vector());
}
