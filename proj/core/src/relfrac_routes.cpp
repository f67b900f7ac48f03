#include <algorithm>

#include "relfrac/automorphism.hpp"
#include "relfrac/cliques.hpp"
#include "relfrac/cutting_plane.hpp"
#include "relfrac/error.hpp"
#include "relfrac/lp.hpp"
#include "relfrac_internal.hpp"

namespace relfrac {

namespace detail {

MisOptions mis_options(const RelFracOptions& opt, bool vertex_transitive) {
  MisOptions m;
  m.timeout_seconds = opt.timeout_seconds;
  m.threads = opt.threads;
  m.canonical_witness = false;
  m.assume_vertex_transitive = vertex_transitive;
  return m;
}

MisResult alpha_with_witness(const Graph& g, const RelFracOptions& opt) {
  return max_independent_set(g, mis_options(opt, g.vt_known().value_or(false)));
}

long alpha(const Graph& g, const RelFracOptions& opt) {
  return alpha_with_witness(g, opt).size();
}

void check_product_size(const Graph& g, const Graph& h, const RelFracOptions& opt) {
  long size = static_cast<long>(g.n()) * h.n();
  if (size > opt.max_product_vertices) {
    throw Error(ErrorKind::kSizeLimit,
                "product has " + std::to_string(size) + " vertices, limit is " +
                    std::to_string(opt.max_product_vertices));
  }
}

VtOptimum vt_optimum(const Graph& g, const Graph& h, const RelFracOptions& opt) {
  const int n = g.n();
  Graph gc = complement(g);
  MisResult clique = alpha_with_witness(gc, opt);
  MisResult ind_g = alpha_with_witness(g, opt);
  MisResult ind_h = alpha_with_witness(h, opt);
  VtOptimum out;
  out.nodes = clique.stats.nodes + ind_g.stats.nodes + ind_h.stats.nodes;
  // Product of witnesses: the image of every clique vertex is a maximum
  // independent set of h.
  out.f.sets.assign(n, VertexSet(h.n()));
  clique.witness.for_each([&](int v) { out.f.sets[v] = ind_h.witness; });
  const long lower = static_cast<long>(clique.size()) * ind_h.size();
  // For vertex-transitive g, α*(complement(g)) = n / α(g).
  const long upper = static_cast<long>(n) * ind_h.size() / ind_g.size();
  out.alpha = lower;
  if (lower == upper) return out;
  check_product_size(g, h, opt);
  Graph product = strong_product(gc, h);
  MisOptions mo = mis_options(opt, h.vt_known().value_or(false));
  LocalSearchOptions ls;
  ls.target = static_cast<int>(upper);
  ls.timeout_seconds = std::min(30.0, opt.timeout_seconds / 4);
  mo.initial = local_search_independent_set(product, product_set_from_assignment(g, h, out.f), ls);
  mo.stop_at = Rational(upper);
  MisResult best = max_independent_set(product, mo);
  out.nodes += best.stats.nodes;
  out.alpha = best.size();
  out.f = assignment_from_product_set(g, h, best.witness);
  return out;
}

}  // namespace detail

Rational fractional_independence(const Graph& g) {
  if (g.n() == 0) return Rational(0);
  LinearProgram lp;
  lp.dim = g.n();
  lp.objective.assign(g.n(), Rational(1));
  for (const auto& c : enumerate_maximal_cliques(g, 64)) {
    LpRow row;
    row.coeffs.assign(g.n(), Rational());
    c.for_each([&](int v) { row.coeffs[v] = Rational(1); });
    row.rhs = Rational(1);
    lp.rows.push_back(std::move(row));
  }
  return solve_lp(lp).value;
}

Rational fractional_chromatic(const Graph& g) {
  return fractional_independence(complement(g));
}

void verify_distribution(const Graph& g, const Graph& h,
                         const std::vector<DualTerm>& dist, const Rational& value) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInternalInconsistency, "distribution check: " + what);
  };
  if (g.n() == 0) return;
  Rational mass;
  std::vector<Rational> expect(g.n());
  for (const auto& term : dist) {
    if (term.beta.sign() <= 0) fail("non-positive probability");
    if (!is_valid_assignment(g, h, term.f)) fail("invalid assignment");
    mass += term.beta;
    for (int v = 0; v < g.n(); ++v) {
      expect[v] += term.beta * Rational(term.f.sets[v].count());
    }
  }
  if (mass != Rational(1)) fail("probabilities sum to " + mass.str());
  Rational lo = *std::min_element(expect.begin(), expect.end());
  if (lo != value.reciprocal()) {
    fail("min expected image size " + lo.str() + " != 1/" + value.str());
  }
}

RelFracResult relfrac_lp(const Graph& g, const Graph& h, const RelFracOptions& opt) {
  if (h.n() == 0) throw Error(ErrorKind::kInvalidArgument, "H must have a vertex");
  const int n = g.n();
  RelFracResult result;
  result.method = RelFracMethod::kLp;
  if (n == 0) return result;
  detail::check_product_size(g, h, opt);
  const int hn = h.n();
  Graph product = strong_product(complement(g), h);

  MisResult ind_h = detail::alpha_with_witness(h, opt);
  result.mis_nodes += ind_h.stats.nodes;
  std::vector<LpRow> seeds;
  std::vector<AssignmentF> row_assignment;
  for (int i = 0; i < n; ++i) {
    LpRow row;
    row.coeffs.assign(n, Rational());
    row.coeffs[i] = Rational(ind_h.size());
    row.rhs = Rational(1);
    seeds.push_back(std::move(row));
    AssignmentF f;
    f.sets.assign(n, VertexSet(hn));
    f.sets[i] = ind_h.witness;
    row_assignment.push_back(std::move(f));
  }

  MisOptions mo = detail::mis_options(opt, false);
  auto oracle = [&](const std::vector<Rational>& w) -> std::optional<LpRow> {
    WeightMap pw(static_cast<size_t>(n) * hn);
    for (int i = 0; i < n; ++i) {
      for (int u = 0; u < hn; ++u) pw[static_cast<size_t>(i) * hn + u] = w[i];
    }
    MisResult best = max_weight_independent_set(product, pw, mo);
    result.mis_nodes += best.stats.nodes;
    if (best.value <= Rational(1)) return std::nullopt;
    AssignmentF f = assignment_from_product_set(g, h, best.witness);
    LpRow row;
    row.coeffs.reserve(n);
    for (int i = 0; i < n; ++i) row.coeffs.emplace_back(f.sets[i].count());
    row.rhs = Rational(1);
    row_assignment.push_back(std::move(f));
    return row;
  };
  CuttingPlaneOptions cpo;
  cpo.max_iterations = opt.max_lp_iterations;
  CuttingPlaneResult cp = cutting_plane_maximize(n, std::vector<Rational>(n, Rational(1)),
                                                 seeds, oracle, cpo);
  if (cp.lp.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kInternalInconsistency,
                std::string("relative LP ended ") + lp_status_name(cp.lp.status));
  }
  result.value = cp.lp.value;
  result.weights = cp.lp.primal;
  result.lp_iterations = cp.iterations;
  for (size_t r = 0; r < cp.lp.dual.size(); ++r) {
    if (cp.lp.dual[r].is_zero()) continue;
    result.dual_cert.push_back({row_assignment[r], cp.lp.dual[r] / result.value});
  }
  verify_distribution(g, h, result.dual_cert, result.value);
  return result;
}

RelFracResult relfrac_vertex_transitive(const Graph& g, const Graph& h,
                                        const RelFracOptions& opt) {
  if (h.n() == 0) throw Error(ErrorKind::kInvalidArgument, "H must have a vertex");
  if (!is_vertex_transitive(g)) {
    throw Error(ErrorKind::kNotVertexTransitive, "G is not vertex-transitive");
  }
  RelFracResult result;
  result.method = RelFracMethod::kVertexTransitive;
  if (g.n() == 0) return result;
  detail::VtOptimum best = detail::vt_optimum(g, h, opt);
  result.mis_nodes = best.nodes;
  result.value = Rational(g.n(), best.alpha);
  result.weights.assign(g.n(), Rational(1, best.alpha));
  return result;
}

Rational relfrac_cycles(int n, int m) {
  if (n < 3 || m < 3) throw Error(ErrorKind::kInvalidParameter, "cycles need n, m >= 3");
  // C3 is complete, so the value is 1/α(C_m).
  if (n == 3) return Rational(1, m / 2);
  if (m % 2 == 0) return Rational(n, m);
  if (n % 2 == 0) return Rational(n, m - 1);
  return n <= m ? Rational(n, m) : Rational(n, m - 1);
}

std::optional<std::pair<int, int>> cayley_decomposition(int n, int m, int k) {
  for (int l = 0; l <= m / n; ++l) {
    int rest = m - l * n;
    if (rest % (k + 1) == 0) return std::make_pair(l, rest / (k + 1));
  }
  return std::nullopt;
}

std::optional<Rational> relfrac_cayley(int n, int m, int k) {
  if (k < 1 || 2 * k >= n || n >= m) {
    throw Error(ErrorKind::kInvalidParameter, "need 1 <= 2k < n < m");
  }
  if (!cayley_decomposition(n, m, k)) return std::nullopt;
  // n = 2k+1 makes G complete; the value is 1/α(H) = 1/floor(m/(k+1)).
  if (n == 2 * k + 1) return Rational(1, m / (k + 1));
  return Rational(n, m);
}

namespace {

std::optional<RelFracResult> closed_route(const Graph& g, const Graph& h) {
  if (!g.family() || !h.family()) return std::nullopt;
  auto gc = g.family()->circulant();
  auto hc = h.family()->circulant();
  if (!gc || !hc) return std::nullopt;
  auto [n, k] = *gc;
  auto [m, k2] = *hc;
  RelFracResult r;
  if (k == 1 && k2 == 1) {
    r.value = relfrac_cycles(n, m);
    r.method = RelFracMethod::kClosedCycles;
  } else if (k == k2 && 2 * k < n && n < m) {
    auto v = relfrac_cayley(n, m, k);
    if (!v) return std::nullopt;
    r.value = *v;
    r.method = RelFracMethod::kClosedCayley;
  } else {
    return std::nullopt;
  }
  r.weights.assign(n, r.value / Rational(n));
  return r;
}

bool vt_route_available(const Graph& g) { return is_vertex_transitive(g); }

}  // namespace

RelFracResult relfrac(const Graph& g, const Graph& h, MethodChoice method,
                      bool cross_check, const RelFracOptions& opt) {
  RelFracResult primary;
  switch (method) {
    case MethodChoice::kLp:
      primary = relfrac_lp(g, h, opt);
      break;
    case MethodChoice::kVertexTransitive:
      primary = relfrac_vertex_transitive(g, h, opt);
      break;
    case MethodChoice::kClosed: {
      auto c = closed_route(g, h);
      if (!c) {
        throw Error(ErrorKind::kInvalidArgument,
                    "no closed form applies to this pair of graphs");
      }
      primary = *c;
      break;
    }
    case MethodChoice::kAuto: {
      if (auto c = closed_route(g, h)) {
        primary = *c;
      } else if (vt_route_available(g)) {
        primary = relfrac_vertex_transitive(g, h, opt);
      } else {
        primary = relfrac_lp(g, h, opt);
      }
      break;
    }
  }
  if (!cross_check) return primary;

  std::optional<RelFracResult> second;
  const auto product = static_cast<long>(g.n()) * h.n();
  const bool product_ok = product <= opt.max_product_vertices;
  switch (primary.method) {
    case RelFracMethod::kClosedCycles:
    case RelFracMethod::kClosedCayley:
      second = relfrac_vertex_transitive(g, h, opt);
      break;
    case RelFracMethod::kVertexTransitive:
      if (product_ok) second = relfrac_lp(g, h, opt);
      break;
    case RelFracMethod::kLp:
      if (auto c = closed_route(g, h)) {
        second = *c;
      } else if (vt_route_available(g)) {
        second = relfrac_vertex_transitive(g, h, opt);
      }
      break;
  }
  if (second) {
    primary.cross_check_method = second->method;
    primary.cross_check_value = second->value;
    if (second->value != primary.value) {
      throw Error(ErrorKind::kInternalInconsistency,
                  std::string("cross-check mismatch: ") + method_name(primary.method) +
                      " gives " + primary.value.str() + ", " +
                      method_name(second->method) + " gives " + second->value.str());
    }
  }
  return primary;
}

}  // namespace relfrac
