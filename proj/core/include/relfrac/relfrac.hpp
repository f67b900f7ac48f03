#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relfrac/graph.hpp"
#include "relfrac/rational.hpp"

namespace relfrac {

// f: V(G) -> I(H). sets[v] is a subset of V(H).
struct AssignmentF {
  std::vector<VertexSet> sets;

  int total() const;
  int min_size() const;
  friend bool operator==(const AssignmentF& a, const AssignmentF& b) {
    return a.sets == b.sets;
  }
};

// Each image independent, and images of distinct non-adjacent vertices of g
// disconnected in h.
bool is_valid_assignment(const Graph& g, const Graph& h, const AssignmentF& f);
// Independent sets of complement(g) ⊠ h correspond to valid assignments:
// f(v) = {u : (v, u) in s}.
AssignmentF assignment_from_product_set(const Graph& g, const Graph& h,
                                        const VertexSet& s);
VertexSet product_set_from_assignment(const Graph& g, const Graph& h,
                                      const AssignmentF& f);

enum class RelFracMethod { kLp, kVertexTransitive, kClosedCycles, kClosedCayley };
enum class MethodChoice { kAuto, kLp, kVertexTransitive, kClosed };

const char* method_name(RelFracMethod m);
std::optional<MethodChoice> parse_method_choice(const std::string& s);

struct DualTerm {
  AssignmentF f;
  Rational beta;
};

struct RelFracOptions {
  double timeout_seconds = 300.0;  // per exact solve
  int threads = 1;
  int max_product_vertices = 5000;
  int max_lp_iterations = 10000;
  int max_witness_vertices = 400;
};

struct RelFracResult {
  Rational value;
  RelFracMethod method = RelFracMethod::kLp;
  std::vector<Rational> weights;
  std::vector<DualTerm> dual_cert;  // normalized to sum 1; LP route only
  std::optional<Graph> witness;

  // Diagnostics.
  int lp_iterations = 0;
  std::uint64_t mis_nodes = 0;
  std::optional<RelFracMethod> cross_check_method;
  std::optional<Rational> cross_check_value;
};

Rational fractional_independence(const Graph& g);
Rational fractional_chromatic(const Graph& g);

RelFracResult relfrac_lp(const Graph& g, const Graph& h,
                         const RelFracOptions& options = {});
RelFracResult relfrac_vertex_transitive(const Graph& g, const Graph& h,
                                        const RelFracOptions& options = {});
// Cycle pair value for n, m >= 3.
Rational relfrac_cycles(int n, int m);
// Value for Cay(Z_n, ±1..±k) against Cay(Z_m, ±1..±k), 2k < n < m, when
// m = l*n + s*(k+1) has a solution in non-negative integers.
std::optional<Rational> relfrac_cayley(int n, int m, int k);
// Smallest l (then s) with m = l*n + s*(k+1), if any.
std::optional<std::pair<int, int>> cayley_decomposition(int n, int m, int k);

RelFracResult relfrac(const Graph& g, const Graph& h,
                      MethodChoice method = MethodChoice::kAuto,
                      bool cross_check = false,
                      const RelFracOptions& options = {});

Rational ratio_lower_bound(const Graph& g, const Graph& h, const Graph& w,
                           const RelFracOptions& options = {});

enum class GammaKind { kGamma0, kGamma1 };
enum class Extent { kFinite, kInfinite };

struct GammaResult {
  GammaKind kind = GammaKind::kGamma0;
  Extent extent = Extent::kFinite;
  Rational value;  // meaningful when extent is finite
  std::optional<AssignmentF> best_assignment;
  std::vector<DualTerm> distribution;
  std::uint64_t nodes = 0;
};

struct Gamma0Options {
  double timeout_seconds = 300.0;
  std::uint64_t max_nodes = 50'000'000;
};

GammaResult gamma0(const Graph& g, const Graph& h, const Gamma0Options& options = {});
GammaResult gamma1_certificate(const Graph& g, const Graph& h,
                               const RelFracOptions& options = {});
// Throws kInternalInconsistency unless min_v E|F(v)| equals 1/value.
void verify_distribution(const Graph& g, const Graph& h,
                         const std::vector<DualTerm>& dist, const Rational& value);

// complement(g) with vertex v_i copied N*w_i times, N the lcm of the weight
// denominators.
Graph replicated_complement(const Graph& g, const std::vector<Rational>& weights);
// Builds the witness from relfrac weights and checks the ratio exactly.
Graph maximizer_witness(const Graph& g, const Graph& h,
                        const RelFracOptions& options = {});

struct CapacityBound {
  long alpha = 0;
  std::string root;  // alpha^(1/d), six decimals, display only
};
CapacityBound capacity_lower_bound(const Graph& g, int d,
                                   const RelFracOptions& options = {});

Rational independence_graph_bound(const Graph& g, const std::vector<VertexSet>& subset);

}  // namespace relfrac
