#include "relfrac/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace relfrac {

namespace {

// Two graphs laid side by side; vertex ids of b are shifted by a.n().
class PairSearch {
 public:
  PairSearch(const Graph& a, const Graph& b) : a_(a), b_(b), na_(a.n()) {}

  std::optional<Permutation> run(std::vector<int> colors) {
    return search(std::move(colors));
  }

 private:
  const VertexSet& nbrs(int x) const {
    return x < na_ ? a_.neighbors(x) : b_.neighbors(x - na_);
  }
  int offset(int x) const { return x < na_ ? 0 : na_; }

  // Color refinement to the coarsest equitable partition. Colors are
  // renumbered canonically by sorted signatures so both sides agree.
  void refine(std::vector<int>& colors) const {
    const int total = static_cast<int>(colors.size());
    int num_colors = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> sig(total);
    while (true) {
      for (int x = 0; x < total; ++x) {
        auto& s = sig[x];
        s.clear();
        s.push_back(colors[x]);
        const int off = offset(x);
        nbrs(x).for_each([&](int y) { s.push_back(colors[y + off]); });
        std::sort(s.begin() + 1, s.end());
      }
      std::map<std::vector<int>, int> ids;
      for (int x = 0; x < total; ++x) ids.emplace(sig[x], 0);
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (int x = 0; x < total; ++x) colors[x] = ids[sig[x]];
      if (next == num_colors) return;
      num_colors = next;
    }
  }

  std::optional<Permutation> search(std::vector<int> colors) {
    refine(colors);
    const int total = static_cast<int>(colors.size());
    const int num_colors = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<int> count_a(num_colors, 0);
    std::vector<int> count_b(num_colors, 0);
    for (int x = 0; x < total; ++x) {
      (x < na_ ? count_a : count_b)[colors[x]]++;
    }
    if (count_a != count_b) return std::nullopt;
    int pick = -1;
    for (int c = 0; c < num_colors; ++c) {
      if (count_a[c] > 1 && (pick < 0 || count_a[c] < count_a[pick])) pick = c;
    }
    if (pick < 0) {
      Permutation p(na_);
      std::vector<int> owner(num_colors, -1);
      for (int x = 0; x < na_; ++x) owner[colors[x]] = x;
      for (int y = na_; y < total; ++y) p[owner[colors[y]]] = y - na_;
      if (is_isomorphism(a_, b_, p)) return p;
      return std::nullopt;
    }
    int x = -1;
    for (int v = 0; v < na_ && x < 0; ++v) {
      if (colors[v] == pick) x = v;
    }
    for (int y = na_; y < total; ++y) {
      if (colors[y] != pick) continue;
      std::vector<int> next = colors;
      next[x] = num_colors;
      next[y] = num_colors;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  const Graph& a_;
  const Graph& b_;
  int na_;
};

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (size_t v = 0; v < inner.size(); ++v) r[v] = outer[inner[v]];
  return r;
}

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& p) {
  if (a.n() != b.n() || static_cast<int>(p.size()) != a.n()) return false;
  std::vector<char> seen(a.n(), 0);
  for (int v : p) {
    if (v < 0 || v >= a.n() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int u = 0; u < a.n(); ++u) {
    for (int v = u + 1; v < a.n(); ++v) {
      if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return std::nullopt;
  if (a.n() == 0) return Permutation{};
  PairSearch s(a, b);
  return s.run(std::vector<int>(static_cast<size_t>(2 * a.n()), 0));
}

std::optional<Permutation> find_automorphism_mapping(const Graph& g, int from,
                                                     int to) {
  PairSearch s(g, g);
  std::vector<int> colors(static_cast<size_t>(2 * g.n()), 0);
  colors[from] = 1;
  colors[g.n() + to] = 1;
  return s.run(std::move(colors));
}

std::optional<std::vector<Permutation>> family_rotations(const Graph& g) {
  if (!g.family() || !g.family()->circulant()) return std::nullopt;
  const int n = g.n();
  std::vector<Permutation> rot;
  for (int r = 0; r < n; ++r) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + r) % n;
    rot.push_back(std::move(p));
  }
  return rot;
}

namespace {

// Orbit of 0 under the generators, with an automorphism reaching each
// orbit member.
std::map<int, Permutation> orbit_of_zero(const std::vector<Permutation>& gens,
                                         int n) {
  std::map<int, Permutation> reach;
  Permutation id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  reach.emplace(0, id);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      int w = g[u];
      if (!reach.count(w)) {
        reach.emplace(w, compose(g, reach.at(u)));
        queue.push_back(w);
      }
    }
  }
  return reach;
}

std::vector<Permutation> transversal_by_search(const Graph& g, bool& transitive) {
  const int n = g.n();
  transitive = true;
  if (n <= 1) {
    return n == 1 ? std::vector<Permutation>{Permutation{0}}
                  : std::vector<Permutation>{};
  }
  int d0 = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != d0) {
      transitive = false;
      return {};
    }
  }
  std::vector<Permutation> gens;
  auto reach = orbit_of_zero(gens, n);
  for (int u = 1; u < n; ++u) {
    if (reach.count(u)) continue;
    auto p = find_automorphism_mapping(g, 0, u);
    if (!p) {
      transitive = false;
      return {};
    }
    gens.push_back(std::move(*p));
    reach = orbit_of_zero(gens, n);
  }
  std::vector<Permutation> out;
  for (auto& [u, p] : reach) out.push_back(std::move(p));
  return out;
}

}  // namespace

bool is_vertex_transitive(const Graph& g) {
  if (auto known = g.vt_known()) return *known;
  bool transitive = false;
  transversal_by_search(g, transitive);
  g.set_vt_known(transitive);
  return transitive;
}

std::vector<Permutation> transitive_transversal(const Graph& g) {
  if (auto rot = family_rotations(g)) return *rot;
  bool transitive = false;
  auto out = transversal_by_search(g, transitive);
  g.set_vt_known(transitive);
  return out;
}

std::optional<std::vector<Permutation>> close_group(
    const std::vector<Permutation>& generators, int n, std::size_t cap) {
  Permutation id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> order{id};
  for (size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(g, order[head]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

}  // namespace relfrac
