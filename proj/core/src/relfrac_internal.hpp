#pragma once

#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"

namespace relfrac::detail {

MisOptions mis_options(const RelFracOptions& opt, bool vertex_transitive);
// Exact α with a witness; uses the vertex-transitive shortcut only when the
// graph's cached flag says so.
MisResult alpha_with_witness(const Graph& g, const RelFracOptions& opt);
long alpha(const Graph& g, const RelFracOptions& opt);
void check_product_size(const Graph& g, const Graph& h, const RelFracOptions& opt);

// α(complement(g) ⊠ h) together with an assignment attaining it, for
// vertex-transitive g.
struct VtOptimum {
  long alpha = 0;
  AssignmentF f;
  std::uint64_t nodes = 0;
};
VtOptimum vt_optimum(const Graph& g, const Graph& h, const RelFracOptions& opt);

}  // namespace relfrac::detail
