#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "relfrac/automorphism.hpp"
#include "relfrac/error.hpp"
#include "relfrac/expand.hpp"
#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"

using namespace relfrac;

namespace {

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

ExpandOp random_op(std::mt19937_64& rng, const Graph& g) {
  const int v = static_cast<int>(rng() % g.n());
  switch (rng() % 3) {
    case 0:
      return ExpandOp::remove(v);
    case 1:
      return ExpandOp::clique(v, 1 + static_cast<int>(rng() % 3));
    default:
      for (int tries = 0; tries < 20; ++tries) {
        int a = static_cast<int>(rng() % g.n()), b = static_cast<int>(rng() % g.n());
        if (a != b && !g.adjacent(a, b)) return ExpandOp::edge(a, b);
      }
      return ExpandOp::clique(v, 2);
  }
}

}  // namespace

TEST(ApplyExpand, Basics) {
  Graph c5 = make_cycle(5);
  auto id = apply_expand(c5, {});
  EXPECT_EQ(id.graph.edges(), c5.edges());
  auto k3 = apply_expand(make_complete(1), {{ExpandOp::clique(0, 3)}, false});
  EXPECT_EQ(k3.graph.edges(), make_complete(3).edges());
  EXPECT_EQ(k3.labels, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(k3.origin, (std::vector<int>{0, 0, 0}));
}

TEST(ApplyExpand, SevenToTenCirculant) {
  // Double three spread-out vertices of C7, then close the gaps.
  // 0 1 2 3 4 5 6: doubling 1, 3, 5 gives labels 7,8 / 9,10 / 11,12
  ExpandScript s;
  s.ops = {ExpandOp::clique(1, 2), ExpandOp::clique(3, 2), ExpandOp::clique(5, 2)};
  Graph partial = apply_expand(make_cycle(7), s).graph;
  EXPECT_EQ(partial.n(), 10);
  auto cert = in_expand_certificate(make_cycle(7), make_cayley_cyclic(10, 2));
  ASSERT_TRUE(cert.has_value());
  auto r = apply_expand(make_cycle(7), cert->script);
  EXPECT_TRUE(isomorphic(r.graph, make_cayley_cyclic(10, 2)));
  EXPECT_TRUE(replay_matches(make_cycle(7), make_cayley_cyclic(10, 2), *cert));
}

TEST(ApplyExpand, ErrorsNameTheStep) {
  ExpandScript s;
  s.ops = {ExpandOp::remove(0), ExpandOp::remove(0)};
  try {
    apply_expand(make_cycle(4), s);
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.step(), 1);
  }
  ExpandScript t;
  t.ops = {ExpandOp::edge(0, 1)};
  EXPECT_THROW(apply_expand(make_cycle(4), t), ScriptError);
  ExpandScript u;
  u.ops = {ExpandOp::clique(0, 0)};
  EXPECT_THROW(apply_expand(make_cycle(4), u), ScriptError);
  ExpandScript v;
  v.ops = {ExpandOp::clique(0, 2), ExpandOp::edge(0, 2)};
  EXPECT_THROW(apply_expand(make_cycle(4), v), ScriptError);
}

TEST(InExpand, Examples) {
  auto a = in_expand(make_cycle(7), make_cayley_cyclic(10, 2));
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->normal_form);
  for (const Graph& g : {make_cycle(5), make_path(4), make_johnson3(5)}) {
    auto s = in_expand(g, g);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(isomorphic(apply_expand(g, *s).graph, g));
  }
  Graph c = make_cayley_cyclic(9, 3);
  EXPECT_FALSE(in_expand(make_cycle(9), disjoint_union(c, c)).has_value());
}

TEST(InExpand, NormalFormOrder) {
  auto s = in_expand(make_cycle(7), make_cayley_cyclic(10, 2));
  ASSERT_TRUE(s.has_value());
  int phase = 0;
  for (const auto& op : s->ops) {
    int p = op.kind == ExpandOp::Kind::kRemove ? 0 : op.kind == ExpandOp::Kind::kClique ? 1 : 2;
    EXPECT_GE(p, phase);
    phase = p;
  }
}

TEST(InExpand, SoundAndConsistentWithValue) {
  std::mt19937_64 rng(70);
  int some = 0;
  for (int t = 0; t < 80; ++t) {
    Graph h = oracle::random_graph(rng, 1, 6), g = oracle::random_graph(rng, 1, 7);
    auto cert = in_expand_certificate(h, g);
    if (!expand_feasibility_prefilter(h, g)) EXPECT_FALSE(cert.has_value());
    if (!cert) continue;
    ++some;
    EXPECT_TRUE(isomorphic(apply_expand(h, cert->script).graph, g));
    Rational v = relfrac::relfrac(g, h).value;
    EXPECT_LE(v, Rational(1));
    if (oracle::alpha(g) >= oracle::alpha(h)) EXPECT_EQ(v, Rational(1));
  }
  EXPECT_GT(some, 10);
}

TEST(InExpand, PerfectTargetsConverse) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 40; ++t) {
    Graph h = oracle::random_graph(rng, 1, 6);
    // bipartite target
    const int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    Graph g(a + b);
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (rng() % 2) g.add_edge(x, a + y);
    if (relfrac::relfrac(g, h).value <= Rational(1)) {
      EXPECT_TRUE(in_expand(h, g).has_value()) << t;
    }
  }
}

TEST(Prefilter, Examples) {
  EXPECT_TRUE(expand_feasibility_prefilter(make_cycle(7), make_cayley_cyclic(10, 2)));
  EXPECT_TRUE(expand_feasibility_prefilter(make_complete(1), make_complete(5)));
  EXPECT_FALSE(expand_feasibility_prefilter(make_complete(2), make_cycle(7)));
}

TEST(DeriveExpand, Examples) {
  Graph c5 = make_cycle(5);
  Graph p = strong_product(complement(c5), c5);
  VertexSet diag(p.n());
  for (int v = 0; v < 5; ++v) diag.insert(v * 5 + v);
  auto d = derive_expand_from_independent_set(c5, c5, diag);
  EXPECT_EQ(d.g_prime.edges(), c5.edges());
  EXPECT_EQ(d.h_prime.edges(), c5.edges());
  EXPECT_TRUE(d.script.ops.empty());

  Graph c7 = make_cycle(7);
  Graph q = strong_product(complement(c7), c7);
  auto best = max_independent_set(q);
  EXPECT_EQ(best.size(), 7);
  auto e = derive_expand_from_independent_set(c7, c7, best.witness);
  EXPECT_TRUE(isomorphic(apply_expand(e.h_prime, e.script).graph, e.g_prime));

  auto z = derive_expand_from_independent_set(c5, c5, VertexSet(25));
  EXPECT_EQ(z.g_prime.n(), 0);
  EXPECT_EQ(z.h_prime.n(), 0);
  EXPECT_TRUE(z.script.ops.empty());

  VertexSet bad(25, {0, 1});
  EXPECT_THROW(derive_expand_from_independent_set(c5, c5, bad), Error);
}

TEST(DeriveExpand, RandomIndependentSets) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1, 5), h = oracle::random_graph(rng, 1, 5);
    Graph p = strong_product(complement(g), h);
    VertexSet s = t % 2 ? max_independent_set(p).witness : greedy_independent_set(p);
    auto d = derive_expand_from_independent_set(g, h, s);
    EXPECT_TRUE(isomorphic(apply_expand(d.h_prime, d.script).graph, d.g_prime));
    EXPECT_LE(relfrac::relfrac(d.g_prime.n() ? d.g_prime : make_complete(1),
                               d.h_prime.n() ? d.h_prime : make_complete(1))
                  .value,
              Rational(1));
  }
}

TEST(CliquePartition, Examples) {
  auto c6 = clique_partition_perfect(make_cycle(6));
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(c6->size(), 3u);
  for (const auto& b : *c6) EXPECT_EQ(b.count(), 2);
  auto k5 = clique_partition_perfect(make_complete(5));
  ASSERT_TRUE(k5.has_value());
  EXPECT_EQ(k5->size(), 1u);
  EXPECT_FALSE(clique_partition_perfect(make_cycle(5)).has_value());
}

TEST(ExpandMonotone, SingleOpsNeverRaiseAlpha) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 2, 6), w = oracle::random_graph(rng, 1, 5);
    ExpandScript s;
    s.ops = {random_op(rng, g)};
    Graph g2 = apply_expand(g, s).graph;
    EXPECT_LE(max_independent_set(strong_product(g2, w)).size(),
              max_independent_set(strong_product(g, w)).size());
  }
}
