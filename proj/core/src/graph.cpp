#include "relfrac/graph.hpp"

#include <algorithm>

#include "relfrac/error.hpp"

namespace relfrac {

namespace {

std::shared_ptr<const Family> family_ptr(const Graph& g) {
  if (!g.family()) return nullptr;
  return std::make_shared<const Family>(*g.family());
}

Family derived(std::string op, std::vector<std::shared_ptr<const Family>> parents) {
  Family f;
  f.kind = Family::Kind::kDerived;
  f.op = std::move(op);
  f.parents = std::move(parents);
  return f;
}

}  // namespace

std::optional<std::pair<int, int>> Family::circulant() const {
  if (kind == Kind::kCycle) return std::make_pair(n, 1);
  if (kind == Kind::kCayleyCyclic) return std::make_pair(n, k);
  return std::nullopt;
}

std::string Family::str() const {
  switch (kind) {
    case Kind::kCycle: return "cycle:" + std::to_string(n);
    case Kind::kCayleyCyclic:
      return "cayley:" + std::to_string(n) + ":" + std::to_string(k);
    case Kind::kJohnson3: return "johnson3:" + std::to_string(n);
    case Kind::kComplete: return "complete:" + std::to_string(n);
    case Kind::kDerived: break;
  }
  std::string out = op + "(";
  for (size_t i = 0; i < parents.size(); ++i) {
    if (i) out += ",";
    out += parents[i] ? parents[i]->str() : "?";
  }
  return out + ")";
}

Graph::Graph(int n)
    : adj_(static_cast<size_t>(n), VertexSet(n)),
      vt_cache_(std::make_shared<std::atomic<int>>(-1)) {
  if (n < 0) throw Error(ErrorKind::kInvalidParameter, "negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge endpoint out of range: " + std::to_string(u) + " " +
                      std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorKind::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  adj_[u].insert(v);
  adj_[v].insert(u);
}

int Graph::num_edges() const {
  int twice = 0;
  for (const auto& s : adj_) twice += s.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<bool> Graph::vt_known() const {
  int s = vt_cache_->load();
  if (s < 0) return std::nullopt;
  return s == 1;
}

void Graph::set_vt_known(bool value) const { vt_cache_->store(value ? 1 : 0); }

Graph Graph::with_family(Family f) const {
  Graph g = without_family();
  g.family_ = std::move(f);
  if (g.family_->is_constructor()) g.set_vt_known(true);
  return g;
}

Graph Graph::without_family() const {
  Graph g(n());
  g.adj_ = adj_;
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::kInvalidParameter, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g.with_family(Family::cycle(n));
}

Graph make_cayley_cyclic(int n, int k) {
  if (n < 3 || k < 1 || k > n / 2) {
    throw Error(ErrorKind::kInvalidParameter,
                "cayley graph needs n >= 3 and 1 <= k <= n/2");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) g.add_edge(i, (i + d) % n);
  }
  return g.with_family(Family::cayley(n, k));
}

std::vector<std::array<int, 3>> johnson3_subsets(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

Graph make_johnson3(int n) {
  if (n < 4) throw Error(ErrorKind::kInvalidParameter, "johnson3 needs n >= 4");
  auto subsets = johnson3_subsets(n);
  int count = static_cast<int>(subsets.size());
  Graph g(count);
  for (int x = 0; x < count; ++x) {
    for (int y = x + 1; y < count; ++y) {
      int common = 0;
      for (int a : subsets[x]) {
        for (int b : subsets[y]) common += a == b;
      }
      if (common == 1) g.add_edge(x, y);
    }
  }
  return g.with_family(Family::johnson3(n));
}

Graph make_complete(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidParameter, "negative vertex count");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g.with_family(Family::complete(n));
}

Graph make_edgeless(int n) {
  Graph g(n);
  g.set_vt_known(true);
  return g;
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph realize_family(const Family& f) {
  switch (f.kind) {
    case Family::Kind::kCycle: return make_cycle(f.n);
    case Family::Kind::kCayleyCyclic: return make_cayley_cyclic(f.n, f.k);
    case Family::Kind::kJohnson3: return make_johnson3(f.n);
    case Family::Kind::kComplete: return make_complete(f.n);
    case Family::Kind::kDerived: break;
  }
  throw Error(ErrorKind::kInvalidArgument, "derived family cannot be rebuilt");
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) c.add_edge(u, v);
    }
  }
  c = c.with_family(derived("complement", {family_ptr(g)}));
  if (auto vt = g.vt_known()) c.set_vt_known(*vt);
  return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.n() + h.n());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + g.n(), b + g.n());
  return u.with_family(derived("union", {family_ptr(g), family_ptr(h)}));
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int gn = g.n();
  const int hn = h.n();
  Graph p(gn * hn);
  for (int i = 0; i < gn; ++i) {
    for (int j = 0; j < hn; ++j) {
      const int a = i * hn + j;
      for (int i2 = i; i2 < gn; ++i2) {
        if (i2 != i && !g.adjacent(i, i2)) continue;
        for (int j2 = 0; j2 < hn; ++j2) {
          if (j2 != j && !h.adjacent(j, j2)) continue;
          const int b = i2 * hn + j2;
          if (b > a) p.add_edge(a, b);
        }
      }
    }
  }
  p = p.with_family(derived("sprod", {family_ptr(g), family_ptr(h)}));
  if (g.vt_known() == true && h.vt_known() == true) p.set_vt_known(true);
  return p;
}

Graph strong_power(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorKind::kInvalidParameter, "strong power needs d >= 1");
  Graph p = g;
  for (int i = 1; i < d; ++i) p = strong_product(p, g);
  return p;
}

Graph disjunctive_product(const Graph& g, const Graph& h) {
  const int gn = g.n();
  const int hn = h.n();
  Graph p(gn * hn);
  for (int a = 0; a < gn * hn; ++a) {
    for (int b = a + 1; b < gn * hn; ++b) {
      if (g.adjacent(a / hn, b / hn) || h.adjacent(a % hn, b % hn)) {
        p.add_edge(a, b);
      }
    }
  }
  p = p.with_family(derived("dprod", {family_ptr(g), family_ptr(h)}));
  if (g.vt_known() == true && h.vt_known() == true) p.set_vt_known(true);
  return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph s(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.adjacent(vertices[a], vertices[b])) s.add_edge(a, b);
    }
  }
  return s;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

bool are_disconnected(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (!is_independent(g, s) || !is_independent(g, t)) {
    throw Error(ErrorKind::kInvalidArgument, "sets must be independent");
  }
  if (s.intersects(t)) return false;
  return is_independent(g, s | t);
}

}  // namespace relfrac
