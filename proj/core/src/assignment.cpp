#include "relfrac/error.hpp"
#include "relfrac/relfrac.hpp"

namespace relfrac {

int AssignmentF::total() const {
  int t = 0;
  for (const auto& s : sets) t += s.count();
  return t;
}

int AssignmentF::min_size() const {
  int m = -1;
  for (const auto& s : sets) {
    int c = s.count();
    if (m < 0 || c < m) m = c;
  }
  return m < 0 ? 0 : m;
}

bool is_valid_assignment(const Graph& g, const Graph& h, const AssignmentF& f) {
  if (static_cast<int>(f.sets.size()) != g.n()) return false;
  for (const auto& s : f.sets) {
    if (s.universe() != h.n() || !is_independent(h, s)) return false;
  }
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.adjacent(a, b)) continue;
      if (f.sets[a].intersects(f.sets[b])) return false;
      if (!is_independent(h, f.sets[a] | f.sets[b])) return false;
    }
  }
  return true;
}

AssignmentF assignment_from_product_set(const Graph& g, const Graph& h,
                                        const VertexSet& s) {
  if (s.universe() != g.n() * h.n()) {
    throw Error(ErrorKind::kInvalidArgument, "product set has the wrong universe");
  }
  AssignmentF f;
  f.sets.assign(g.n(), VertexSet(h.n()));
  s.for_each([&](int x) { f.sets[x / h.n()].insert(x % h.n()); });
  return f;
}

VertexSet product_set_from_assignment(const Graph& g, const Graph& h,
                                      const AssignmentF& f) {
  VertexSet s(g.n() * h.n());
  for (int v = 0; v < g.n(); ++v) {
    f.sets[v].for_each([&](int u) { s.insert(v * h.n() + u); });
  }
  return s;
}

const char* method_name(RelFracMethod m) {
  switch (m) {
    case RelFracMethod::kLp: return "lp";
    case RelFracMethod::kVertexTransitive: return "vertex_transitive";
    case RelFracMethod::kClosedCycles: return "closed_cycles";
    case RelFracMethod::kClosedCayley: return "closed_cayley";
  }
  return "unknown";
}

std::optional<MethodChoice> parse_method_choice(const std::string& s) {
  if (s == "auto") return MethodChoice::kAuto;
  if (s == "lp") return MethodChoice::kLp;
  if (s == "vt") return MethodChoice::kVertexTransitive;
  if (s == "closed") return MethodChoice::kClosed;
  return std::nullopt;
}

}  // namespace relfrac
