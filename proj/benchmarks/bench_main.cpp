#include <benchmark/benchmark.h>

#include "relfrac/expand.hpp"
#include "relfrac/generalized.hpp"
#include "relfrac/homomorphism.hpp"
#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"

using namespace relfrac;

namespace {

void BM_MisCycleProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = strong_product(make_cycle(n), make_cycle(n));
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g).size());
  state.counters["vertices"] = g.n();
}
BENCHMARK(BM_MisCycleProduct)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_MisJohnson(benchmark::State& state) {
  Graph g = make_johnson3(static_cast<int>(state.range(0)));
  MisOptions o;
  o.assume_vertex_transitive = true;
  o.canonical_witness = false;
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g, o).size());
}
BENCHMARK(BM_MisJohnson)->Arg(10)->Arg(14)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_WeightedMis(benchmark::State& state) {
  Graph g = strong_product(complement(make_cycle(7)), make_cycle(9));
  WeightMap w(g.n());
  for (int v = 0; v < g.n(); ++v) w[v] = Rational(1 + v % 5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_independent_set(g, w).value);
}
BENCHMARK(BM_WeightedMis)->Unit(benchmark::kMillisecond);

void BM_LocalSearch(benchmark::State& state) {
  Graph p = strong_product(complement(make_cycle(7)), make_johnson3(14));
  LocalSearchOptions o;
  o.target = 28;
  for (auto _ : state)
    benchmark::DoNotOptimize(local_search_independent_set(p, VertexSet(p.n()), o).count());
}
BENCHMARK(BM_LocalSearch)->Unit(benchmark::kMillisecond);

// cutting-plane route on cycle pairs
void BM_RelfracLp(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  Graph h = make_cycle(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(relfrac_lp(g, h).value);
}
BENCHMARK(BM_RelfracLp)->Args({5, 7})->Args({7, 5})->Args({9, 11})->Args({8, 9})
    ->Unit(benchmark::kMillisecond);

void BM_RelfracVertexTransitive(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  Graph h = make_cycle(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(relfrac_vertex_transitive(g, h).value);
}
BENCHMARK(BM_RelfracVertexTransitive)->Args({5, 7})->Args({9, 11})->Args({9, 13})
    ->Unit(benchmark::kMillisecond);

void BM_RelfracNonTransitive(benchmark::State& state) {
  Graph g = make_path(static_cast<int>(state.range(0)));
  Graph h = make_cycle(7);
  for (auto _ : state) benchmark::DoNotOptimize(relfrac_lp(g, h).value);
}
BENCHMARK(BM_RelfracNonTransitive)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Gamma1Johnson(benchmark::State& state) {
  Graph g = make_cycle(8), h = make_johnson3(15);
  for (auto _ : state) benchmark::DoNotOptimize(gamma1_certificate(g, h).value);
}
BENCHMARK(BM_Gamma1Johnson)->Unit(benchmark::kMillisecond);

void BM_Gamma0Johnson(benchmark::State& state) {
  Graph g = make_cycle(8), h = make_johnson3(15);
  for (auto _ : state) benchmark::DoNotOptimize(gamma0(g, h).value);
}
BENCHMARK(BM_Gamma0Johnson)->Unit(benchmark::kMillisecond);

void BM_GeneralizedIndependence(benchmark::State& state) {
  Graph g = make_cycle(7);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generalized_independence(g, k).value);
}
BENCHMARK(BM_GeneralizedIndependence)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HomomorphismSearch(benchmark::State& state) {
  Graph c7 = make_cycle(7), c5 = make_cycle(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_homomorphism(c7, c5).has_value());
    benchmark::DoNotOptimize(find_homomorphism(c5, c7).has_value());
  }
}
BENCHMARK(BM_HomomorphismSearch);

void BM_ExpandCheck(benchmark::State& state) {
  Graph c7 = make_cycle(7), t = make_cayley_cyclic(10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(in_expand(c7, t).has_value());
}
BENCHMARK(BM_ExpandCheck)->Unit(benchmark::kMicrosecond);

void BM_ExpandExhaustiveFailure(benchmark::State& state) {
  Graph c = make_cayley_cyclic(9, 3);
  Graph gg = disjoint_union(c, c), c9 = make_cycle(9);
  for (auto _ : state) benchmark::DoNotOptimize(in_expand(c9, gg).has_value());
}
BENCHMARK(BM_ExpandExhaustiveFailure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
