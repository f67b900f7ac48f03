// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "relfrac/automorphism.hpp"
#include "relfrac/error.hpp"
#include "relfrac/expand.hpp"
#include "relfrac/generalized.hpp"
#include "relfrac/homomorphism.hpp"
#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"

using namespace relfrac;

namespace {

struct Check {
  int passed = 0;
  std::vector<std::string> failures;

  void operator()(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      failures.push_back(what);
    }
  }
  int total() const { return passed + static_cast<int>(failures.size()); }
};

int alpha(const Graph& g) { return max_independent_set(g).size(); }
Rational rf(const Graph& g, const Graph& h) { return relfrac::relfrac(g, h).value; }
Graph bare(const Graph& g) { return Graph::from_edges(g.n(), g.edges()); }

std::string show(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " E=[";
  for (auto [u, v] : g.edges()) os << u << "-" << v << " ";
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

void cycle_grid(Check& check) {
  for (int n = 3; n <= 9; ++n)
    for (int m = 3; m <= 9; ++m) {
      Graph g = make_cycle(n), h = make_cycle(m);
      Rational closed = relfrac_cycles(n, m);
      Rational vt = relfrac_vertex_transitive(g, h).value;
      Rational lp = relfrac_lp(g, h).value;
      check(closed == vt && vt == lp,
            "cell (" + std::to_string(n) + "," + std::to_string(m) + "): closed " +
                closed.str() + " vt " + vt.str() + " lp " + lp.str());
    }
}

void c9_c11(Check& check) {
  Graph c9 = make_cycle(9), c11 = make_cycle(11);
  int a = alpha(strong_product(complement(c9), c11));
  check(a == 11, "alpha(C9^c x C11) = " + std::to_string(a));
  Rational v = relfrac_vertex_transitive(c9, c11).value;
  check(v == Rational(9, 11), "vt value " + v.str());
  Rational lp = relfrac_lp(c9, c11).value;
  check(lp == Rational(9, 11), "lp value " + lp.str());
}

void strong_products(Check& check) {
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= j; ++k) {
      int a = alpha(strong_product(make_cycle(2 * j + 1), make_cycle(2 * k + 1)));
      check(a == j * k + k / 2, "C" + std::to_string(2 * j + 1) + " x C" +
                                    std::to_string(2 * k + 1) + ": " + std::to_string(a));
    }
  check(alpha(strong_product(make_cycle(5), make_cycle(5))) == 5, "C5 x C5");
  check(alpha(make_johnson3(6)) == 4, "J(6,3)");
}

void table_rows(Check& check) {
  Rational a = rf(make_cycle(5), make_cycle(13));
  check(a == Rational(5, 13), "Cay(Z5,1)|Cay(Z13,1) = " + a.str());
  auto a2 = relfrac_cayley(5, 13, 1);
  check(a2 && *a2 == Rational(5, 13), "closed Cayley (5,13,1)");

  Rational b = rf(make_cayley_cyclic(9, 3), make_cycle(9));
  check(b == Rational(1, 2), "Cay(Z9,1..3)|C9 = " + b.str());

  Graph c7 = make_cycle(7), t = make_cayley_cyclic(10, 2);
  Rational c = rf(t, c7);
  check(c == Rational(1), "Cay(Z10,1..2)|C7 = " + c.str());
  auto cert = in_expand_certificate(c7, t);
  check(cert.has_value(), "expand script for Cay(Z10,1..2) from C7");
  if (cert) {
    check(replay_matches(c7, t, *cert), "script replay");
    check(find_isomorphism(apply_expand(c7, cert->script).graph, t).has_value(),
          "replayed graph isomorphic to target");
  }

  Rational d = rf(make_cycle(3), make_johnson3(6));
  check(d == Rational(1, 4), "C3|J(6,3) = " + d.str());

  Graph c8 = make_cycle(8), j15 = make_johnson3(15);
  auto g1 = gamma1_certificate(c8, j15);
  check(g1.value == Rational(4, 13), "Gamma1(C8,J(15,3)) = " + g1.value.str());
  verify_distribution(c8, j15, g1.distribution, g1.value);
  check(true, "Gamma1 distribution verified");
  auto g0 = gamma0(c8, j15);
  check(g0.extent == Extent::kFinite && g0.value == Rational(1, 3),
        "Gamma0(C8,J(15,3)) = " + g0.value.str());
  if (g0.best_assignment)
    check(is_valid_assignment(c8, j15, *g0.best_assignment), "Gamma0 assignment valid");
}

void witnesses(Check& check) {
  struct Pair {
    Graph g, h;
    Rational want;
    const char* name;
  };
  std::vector<Pair> pairs{{make_cycle(5), make_cycle(4), Rational(5, 4), "(C5,C4)"},
                          {make_cycle(5), make_complete(1), Rational(5, 2), "(C5,K1)"}};
  for (const auto& p : pairs) {
    Rational v = rf(p.g, p.h);
    check(v == p.want, std::string(p.name) + " value " + v.str());
    Graph w = maximizer_witness(p.g, p.h);
    Rational ratio(alpha(strong_product(p.g, w)), alpha(strong_product(p.h, w)));
    check(ratio == v, std::string(p.name) + " witness ratio " + ratio.str());
  }
}

void converse_failure(Check& check) {
  Graph c = make_cayley_cyclic(9, 3);
  Graph gg = disjoint_union(c, c);
  Graph c9 = make_cycle(9);
  Rational v = rf(gg, c9);
  check(v == Rational(1), "value " + v.str());
  auto s = in_expand(c9, gg);
  check(!s.has_value(), "in_expand returned a script");
  // the counting condition alone does not rule this pair out
  check(expand_feasibility_prefilter(c9, gg), "prefilter rejected the pair");
}

void homomorphisms(Check& check) {
  auto h = cayley_homomorphism(5, 13, 1, 1, 4);
  check(is_homomorphism(make_cycle(13), make_cycle(5), h.map), "Cayley (5,13,1,1,4)");
  Graph c7 = make_cycle(7), c5 = make_cycle(5);
  auto f = find_homomorphism(c7, c5);
  check(f.has_value() && is_homomorphism(c7, c5, f->map), "C7 -> C5");
  int a = alpha(strong_product(complement(c5), c7));
  check(a >= 7, "alpha(C5^c x C7) = " + std::to_string(a));
  check(!find_homomorphism(c5, c7).has_value(), "C5 -> C7 should not exist");
}

void generalized(Check& check, std::mt19937_64& rng) {
  auto ak = [](const Graph& g, int k) { return generalized_independence(g, k).value; };
  check(ak(make_cycle(5), 1) == 2, "alpha_1(C5)");
  check(ak(make_cycle(5), 2) == 5, "alpha_2(C5)");
  check(ak(make_cycle(7), 2) == 7, "alpha_2(C7)");
  for (int n : {5, 7}) {
    Rational frac = fractional_independence(make_cycle(n));
    const int N = static_cast<int>(frac.den().get_si());
    check(Rational(ak(make_cycle(n), N)) == Rational(N) * frac,
          "alpha_N(C" + std::to_string(n) + ")");
  }
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 1, 8);
    const int k1 = 1 + static_cast<int>(rng() % 3), k2 = 1 + static_cast<int>(rng() % 3);
    check(ak(g, k1) + ak(g, k2) <= ak(g, k1 + k2), "superadditivity " + show(g));
  }
}

void properties(Check& check, std::mt19937_64& rng) {
  auto rg = [&](int lo, int hi) { return oracle::random_graph(rng, lo, hi); };

  // Sandwich and reciprocal.
  for (int t = 0; t < 100; ++t) {
    Graph g = rg(1, 8), h = rg(1, 8);
    Rational v = rf(g, h), back = rf(h, g);
    check(Rational(alpha(g), alpha(h)) <= v, "sandwich alpha " + show(g) + " | " + show(h));
    check(fractional_independence(g) / fractional_independence(h) <= v,
          "sandwich alpha* " + show(g) + " | " + show(h));
    check(v * back >= Rational(1), "reciprocal " + show(g) + " | " + show(h));
  }
  // Two-sided bound through a third graph.
  for (int t = 0; t < 40; ++t) {
    Graph g = rg(1, 6), h = rg(1, 6), w = rg(1, 6);
    Rational mid = rf(g, w) / rf(h, w);
    check(rf(h, g).reciprocal() <= mid && mid <= rf(g, h), "through W " + show(w));
  }
  // Unions.
  for (int t = 0; t < 40; ++t) {
    Graph g1 = rg(1, 4), g2 = rg(1, 4), h = rg(1, 5);
    Rational a = rf(g1, h), b = rf(g2, h);
    check(rf(disjoint_union(g1, g2), h) <= a + b, "union subadditive");
    Rational joined = rf(complement(disjoint_union(complement(g1), complement(g2))), h);
    check(joined == std::max(a, b), "join is max");
  }
  for (int t = 0; t < 40; ++t) {
    Graph g = t % 2 ? oracle::random_circulant(rng, 2, 5) : rg(1, 4);
    Graph h1 = rg(1, 4), h2 = rg(1, 4);
    Rational lhs = rf(g, h1).reciprocal() + rf(g, h2).reciprocal();
    Rational rhs = rf(g, disjoint_union(h1, h2)).reciprocal();
    check(lhs <= rhs, "reciprocal sum over H union");
    if (is_vertex_transitive(g)) check(lhs == rhs, "reciprocal sum equality for transitive G");
  }
  // Submultiplicativity.
  for (int t = 0; t < 30; ++t) {
    Graph g1 = rg(1, 3), g2 = rg(1, 3), h1 = rg(1, 3), h2 = rg(1, 3);
    check(rf(strong_product(g1, g2), strong_product(h1, h2)) <= rf(g1, h1) * rf(g2, h2),
          "submultiplicative");
  }
  // Product with H against H.
  for (int t = 0; t < 30; ++t) {
    Graph g = rg(1, 4), h = rg(1, 3);
    check(rf(strong_product(g, h), h) == fractional_independence(g),
          "G x H | H " + show(g) + " | " + show(h));
  }
  // Gamma chain.
  for (int t = 0; t < 40; ++t) {
    Graph g = rg(1, 5), h = rg(1, 5);
    auto g1 = gamma1_certificate(g, h);
    auto g0 = gamma0(g, h);
    check(Rational(alpha(g), alpha(h)) <= g1.value, "Gamma1 lower");
    check(g1.value == rf(g, h), "Gamma1 equals value");
    if (g0.extent == Extent::kFinite) check(g1.value <= g0.value, "Gamma1 <= Gamma0");
  }
  // Complement duality for transitive pairs.
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_circulant(rng, 2, 7), h = oracle::random_circulant(rng, 2, 7);
    Rational lhs = relfrac_vertex_transitive(g, h).value;
    Rational rhs = Rational(g.n(), h.n()) *
                   relfrac_vertex_transitive(complement(h), complement(g)).value;
    check(lhs == rhs, "complement duality " + show(g) + " | " + show(h));
  }
  // Disjunctive product.
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_circulant(rng, 2, 6), h = oracle::random_circulant(rng, 2, 6);
    check(fractional_independence(disjunctive_product(g, h)) >=
              Rational(alpha(strong_product(g, h))),
          "disjunctive product");
  }
  // Route agreement on transitive G.
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_circulant(rng, 2, 7), h = rg(1, 6);
    check(relfrac_lp(bare(g), h).value ==
              Rational(g.n(), alpha(strong_product(complement(g), h))),
          "route agreement");
  }
  // Homomorphism bound.
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_circulant(rng, 2, 7), h = rg(1, 7);
    if (find_homomorphism(h, g))
      check(rf(g, h) <= Rational(g.n(), h.n()), "homomorphism bound");
  }
  // Common maximizer.
  for (int t = 0; t < 10; ++t) {
    Graph g1 = rg(1, 3), g2 = rg(1, 3);
    Graph w = maximizer_witness(strong_product(g1, g2), make_complete(1));
    check(Rational(alpha(strong_product(g1, w)), alpha(w)) == fractional_independence(g1),
          "common maximizer first");
    check(Rational(alpha(strong_product(g2, w)), alpha(w)) == fractional_independence(g2),
          "common maximizer second");
  }
  // Scripts derived from independent sets replay to G'.
  for (int t = 0; t < 40; ++t) {
    Graph g = rg(1, 5), h = rg(1, 5);
    Graph p = strong_product(complement(g), h);
    VertexSet s = t % 2 ? max_independent_set(p).witness : greedy_independent_set(p);
    auto d = derive_expand_from_independent_set(g, h, s);
    check(find_isomorphism(apply_expand(d.h_prime, d.script).graph, d.g_prime).has_value(),
          "derived script");
  }
  // Single Expand ops never raise alpha(G x W).
  for (int t = 0; t < 50; ++t) {
    Graph g = rg(2, 6), w = rg(1, 5);
    const int v = static_cast<int>(rng() % g.n());
    ExpandScript s;
    switch (rng() % 3) {
      case 0: s.ops = {ExpandOp::remove(v)}; break;
      case 1: s.ops = {ExpandOp::clique(v, 2 + static_cast<int>(rng() % 2))}; break;
      default: {
        auto non = complement(g).edges();
        if (non.empty()) s.ops = {ExpandOp::clique(v, 2)};
        else {
          auto e = non[rng() % non.size()];
          s.ops = {ExpandOp::edge(e.first, e.second)};
        }
      }
    }
    check(alpha(strong_product(apply_expand(g, s).graph, w)) <= alpha(strong_product(g, w)),
          "expand monotone");
  }
}

void oracle_equivalence(Check& check, std::mt19937_64& rng) {
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 1, 5), h = oracle::random_graph(rng, 1, 5);
    std::vector<Rational> w;
    for (int v = 0; v < g.n(); ++v)
      w.emplace_back(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 6));
    WeightMap pw(static_cast<size_t>(g.n()) * h.n());
    for (int i = 0; i < g.n(); ++i)
      for (int u = 0; u < h.n(); ++u) pw[static_cast<size_t>(i) * h.n() + u] = w[i];
    Rational fast = max_weight_independent_set(strong_product(complement(g), h), pw).value;
    Rational slow = oracle::max_weighted_assignment(g, h, w);
    check(fast == slow, "weighted separation " + fast.str() + " vs " + slow.str());
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> run;
  int min_checks = 0;
};

}  // namespace

int main() {
  std::mt19937_64 rng(20240611);
  std::vector<Criterion> all{
      {1, "cycle grid 3..9 x 3..9, three routes", 120, cycle_grid},
      {2, "C9 vs C11", 30, c9_c11},
      {3, "strong product independence numbers", 30, strong_products},
      {4, "table rows", 600, table_rows},
      {5, "maximizer witnesses", 60, witnesses},
      {6, "converse failure G+G vs C9", 300, converse_failure},
      {7, "homomorphisms", 60, homomorphisms},
      {8, "generalized independence", 120, [&](Check& c) { generalized(c, rng); }},
      {9, "randomized properties", 600, [&](Check& c) { properties(c, rng); }, 500},
      {10, "separation oracle vs assignment enumeration", 60,
       [&](Check& c) { oracle_equivalence(c, rng); }, 50},
  };
  int failed = 0;
  for (const auto& c : all) {
    Check check;
    std::string error;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && check.failures.empty() && s <= c.limit_s &&
              check.total() >= c.min_checks;
    failed += !ok;
    std::printf("%s criterion %2d: %s (%d checks, %.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL",
                c.id, c.name, check.total(), s, c.limit_s);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (s > c.limit_s) std::printf("    over time limit\n");
    if (check.total() < c.min_checks)
      std::printf("    only %d checks, need %d\n", check.total(), c.min_checks);
    for (size_t i = 0; i < check.failures.size() && i < 10; ++i)
      std::printf("    violated: %s\n", check.failures[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
