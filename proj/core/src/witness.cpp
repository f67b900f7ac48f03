#include <cmath>
#include <cstdio>

#include "relfrac/automorphism.hpp"
#include "relfrac/error.hpp"
#include "relfrac/independence_graph.hpp"
#include "relfrac_internal.hpp"

namespace relfrac {

Graph replicated_complement(const Graph& g, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != g.n()) {
    throw Error(ErrorKind::kInvalidArgument, "one weight per vertex expected");
  }
  const mpz_class scale = lcm_of_denominators(weights);
  std::vector<int> group;
  long total = 0;
  for (int i = 0; i < g.n(); ++i) {
    const Rational& w = weights[i];
    mpz_class copies = w.num() * (scale / w.den());
    if (copies < 0 || copies > 1'000'000) {
      throw Error(ErrorKind::kSizeLimit, "replication count out of range");
    }
    for (long c = 0; c < copies.get_si(); ++c) group.push_back(i);
    total += copies.get_si();
  }
  Graph w(static_cast<int>(total));
  for (int a = 0; a < w.n(); ++a) {
    for (int b = a + 1; b < w.n(); ++b) {
      int i = group[a];
      int j = group[b];
      if (i != j && !g.adjacent(i, j)) w.add_edge(a, b);
    }
  }
  return w;
}

Graph maximizer_witness(const Graph& g, const Graph& h, const RelFracOptions& opt) {
  RelFracResult r = relfrac(g, h, MethodChoice::kAuto, false, opt);
  mpz_class scale = lcm_of_denominators(r.weights);
  mpz_class size = 0;
  for (const auto& w : r.weights) size += w.num() * (scale / w.den());
  if (size > opt.max_witness_vertices) {
    throw Error(ErrorKind::kSizeLimit,
                "witness would have " + size.get_str() + " vertices, limit is " +
                    std::to_string(opt.max_witness_vertices));
  }
  Graph w = replicated_complement(g, r.weights);
  Rational ratio = ratio_lower_bound(g, h, w, opt);
  if (ratio != r.value) {
    throw Error(ErrorKind::kInternalInconsistency,
                "witness ratio " + ratio.str() + " differs from " + r.value.str());
  }
  return w;
}

Rational ratio_lower_bound(const Graph& g, const Graph& h, const Graph& w,
                           const RelFracOptions& opt) {
  detail::check_product_size(g, w, opt);
  detail::check_product_size(h, w, opt);
  long top = detail::alpha(strong_product(g, w), opt);
  long bottom = detail::alpha(strong_product(h, w), opt);
  if (bottom == 0) throw Error(ErrorKind::kInvalidArgument, "α(H ⊠ W) is zero");
  return Rational(top, bottom);
}

CapacityBound capacity_lower_bound(const Graph& g, int d, const RelFracOptions& opt) {
  if (d < 1) throw Error(ErrorKind::kInvalidParameter, "d must be >= 1");
  long size = 1;
  for (int i = 0; i < d; ++i) {
    size *= g.n();
    if (size > opt.max_product_vertices) {
      throw Error(ErrorKind::kSizeLimit, "strong power exceeds the vertex limit");
    }
  }
  CapacityBound out;
  out.alpha = detail::alpha(strong_power(g, d), opt);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6Lf",
                std::pow(static_cast<long double>(out.alpha), 1.0L / d));
  out.root = buf;
  return out;
}

Rational independence_graph_bound(const Graph& g, const std::vector<VertexSet>& subset) {
  if (subset.empty()) throw Error(ErrorKind::kInvalidArgument, "empty subset");
  for (size_t a = 0; a < subset.size(); ++a) {
    for (size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] == subset[b]) {
        throw Error(ErrorKind::kInvalidArgument, "repeated set " + subset[a].str());
      }
    }
  }
  Graph star = independence_graph_induced(g, subset);
  long total = 0;
  long least = -1;
  for (const auto& s : subset) {
    long c = s.count();
    total += c;
    if (least < 0 || c < least) least = c;
  }
  if (least == 0) {
    throw Error(ErrorKind::kInvalidArgument, "the empty set gives no bound");
  }
  if (is_vertex_transitive(star)) return Rational(static_cast<long>(subset.size()), total);
  return Rational(1, least);
}

}  // namespace relfrac
