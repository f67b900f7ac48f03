#include "relfrac/cliques.hpp"

#include <algorithm>
#include <chrono>

#include "relfrac/error.hpp"
#include "relfrac/mis.hpp"

namespace relfrac {

namespace {

void check_cap(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error(ErrorKind::kSizeLimit,
                "enumeration limited to " + std::to_string(cap) +
                    " vertices, graph has " + std::to_string(g.n()));
  }
}

// Returns false when the visitor asked to stop.
bool bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   const std::function<bool(const VertexSet&)>& visit) {
  if (p.empty() && x.empty()) return visit(r);
  if (p.empty()) return true;
  // Pivot maximizing |P ∩ N(u)| over P ∪ X, smallest id on ties.
  int pivot = -1;
  int pivot_score = -1;
  (p | x).for_each([&](int u) {
    int s = (p & g.neighbors(u)).count();
    if (s > pivot_score) {
      pivot = u;
      pivot_score = s;
    }
  });
  VertexSet branch = p - g.neighbors(pivot);
  for (int v = branch.first(); v >= 0; v = branch.next(v)) {
    r.insert(v);
    bool go = bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), visit);
    r.erase(v);
    if (!go) return false;
    p.erase(v);
    x.insert(v);
  }
  return true;
}

}  // namespace

void for_each_maximal_clique(const Graph& g,
                             const std::function<bool(const VertexSet&)>& visit,
                             int cap) {
  check_cap(g, cap);
  if (g.n() == 0) return;
  VertexSet r(g.n());
  bron_kerbosch(g, r, g.all_vertices(), VertexSet(g.n()), visit);
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g, int cap) {
  std::vector<VertexSet> out;
  for_each_maximal_clique(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  }, cap);
  return out;
}

void for_each_maximal_independent_set(
    const Graph& g, const std::function<bool(const VertexSet&)>& visit, int cap) {
  check_cap(g, cap);
  for_each_maximal_clique(complement(g), visit, cap);
}

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, int cap) {
  return enumerate_maximal_cliques(complement(g), cap);
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g,
                                                  std::size_t max_sets) {
  std::vector<VertexSet> out;
  VertexSet current(g.n());
  // Extends `current` with vertices > last that avoid its neighborhood.
  std::function<void(int, const VertexSet&)> grow = [&](int last,
                                                        const VertexSet& allowed) {
    out.push_back(current);
    if (out.size() > max_sets) {
      throw Error(ErrorKind::kSizeLimit,
                  "more than " + std::to_string(max_sets) + " independent sets");
    }
    for (int v = allowed.next(last); v >= 0; v = allowed.next(v)) {
      current.insert(v);
      grow(v, allowed - g.neighbors(v));
      current.erase(v);
    }
  };
  grow(-1, g.all_vertices());
  return out;
}

int clique_number(const Graph& g) {
  MisOptions opt;
  opt.canonical_witness = false;
  return max_independent_set(complement(g), opt).size();
}

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, double timeout_seconds)
      : g_(g), color_(g.n(), -1), start_(std::chrono::steady_clock::now()),
        timeout_(timeout_seconds) {}

  std::vector<int> run() {
    const int n = g_.n();
    if (n == 0) return {};
    // Upper bound from a greedy pass, lower bound from a clique.
    best_ = greedy();
    best_k_ = 1 + *std::max_element(best_.begin(), best_.end());
    lower_ = clique_number(g_);
    if (lower_ < best_k_) search(0, 0);
    return best_;
  }

 private:
  std::vector<int> greedy() const {
    std::vector<int> col(g_.n(), -1);
    for (int step = 0; step < g_.n(); ++step) {
      int v = pick(col);
      std::vector<char> used(g_.n() + 1, 0);
      g_.neighbors(v).for_each([&](int u) {
        if (col[u] >= 0) used[col[u]] = 1;
      });
      int c = 0;
      while (used[c]) ++c;
      col[v] = c;
    }
    return col;
  }

  // Uncolored vertex with the most distinct neighbor colors, then degree.
  int pick(const std::vector<int>& col) const {
    int best_v = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.n(); ++v) {
      if (col[v] >= 0) continue;
      std::vector<char> seen(g_.n() + 1, 0);
      int sat = 0;
      g_.neighbors(v).for_each([&](int u) {
        if (col[u] >= 0 && !seen[col[u]]) {
          seen[col[u]] = 1;
          ++sat;
        }
      });
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best_v = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best_v;
  }

  void search(int colored, int used) {
    if (best_k_ == lower_) return;
    if ((++nodes_ & 255) == 0 && timeout_ > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count() > timeout_) {
      throw TimeoutError("coloring search timed out", Rational(best_k_));
    }
    if (colored == g_.n()) {
      best_ = color_;
      best_k_ = used;
      return;
    }
    int v = pick(color_);
    std::vector<char> forbidden(g_.n() + 1, 0);
    g_.neighbors(v).for_each([&](int u) {
      if (color_[u] >= 0) forbidden[color_[u]] = 1;
    });
    for (int c = 0; c <= used && c + 1 < best_k_; ++c) {
      if (forbidden[c]) continue;
      color_[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color_[v] = -1;
      if (best_k_ == lower_) return;
    }
  }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<int> best_;
  int best_k_ = 0;
  int lower_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
  double timeout_;
};

}  // namespace

std::vector<int> exact_coloring(const Graph& g, double timeout_seconds) {
  Dsatur d(g, timeout_seconds);
  return d.run();
}

}  // namespace relfrac
