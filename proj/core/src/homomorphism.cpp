#include "relfrac/homomorphism.hpp"

#include <algorithm>
#include <chrono>

#include "relfrac/automorphism.hpp"
#include "relfrac/error.hpp"

namespace relfrac {

bool is_homomorphism(const Graph& source, const Graph& target,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.n()) return false;
  for (int x : map) {
    if (x < 0 || x >= target.n()) return false;
  }
  for (auto [a, b] : source.edges()) {
    if (!target.adjacent(map[a], map[b])) return false;
  }
  return true;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Graph& h, const Graph& g, const HomOptions& opt)
      : h_(h), g_(g), opt_(opt), start_(std::chrono::steady_clock::now()),
        map_(h.n(), -1) {}

  std::optional<Homomorphism> run(bool fix_first) {
    std::vector<VertexSet> dom(h_.n(), g_.all_vertices());
    // Vertices with a neighbor need a target vertex with a neighbor.
    VertexSet non_isolated(g_.n());
    for (int y = 0; y < g_.n(); ++y) {
      if (g_.degree(y) > 0) non_isolated.insert(y);
    }
    for (int x = 0; x < h_.n(); ++x) {
      if (h_.degree(x) > 0) dom[x] &= non_isolated;
    }
    fix_first_ = fix_first;
    if (search(dom, 0)) return Homomorphism{map_};
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  bool search(std::vector<VertexSet>& dom, int done) {
    ++nodes;
    if (nodes > opt_.max_nodes) {
      throw Error(ErrorKind::kUndecided, "homomorphism search exceeded node cap");
    }
    if ((nodes & 4095) == 0 && opt_.timeout_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count() > opt_.timeout_seconds) {
      throw Error(ErrorKind::kUndecided, "homomorphism search timed out");
    }
    if (done == h_.n()) return true;
    // Smallest domain first, then larger source degree, then smaller id.
    int x = -1;
    int best_size = 0;
    for (int v = 0; v < h_.n(); ++v) {
      if (map_[v] >= 0) continue;
      int c = dom[v].count();
      if (c == 0) return false;
      if (x < 0 || c < best_size ||
          (c == best_size && h_.degree(v) > h_.degree(x))) {
        x = v;
        best_size = c;
      }
    }
    VertexSet values = dom[x];
    if (done == 0 && fix_first_ && values.contains(0)) values = VertexSet(g_.n(), {0});
    for (int y = values.first(); y >= 0; y = values.next(y)) {
      std::vector<VertexSet> next = dom;
      bool ok = true;
      h_.neighbors(x).for_each([&](int z) {
        if (!ok || map_[z] >= 0) return;
        next[z] &= g_.neighbors(y);
        if (next[z].empty()) ok = false;
      });
      if (!ok) continue;
      map_[x] = y;
      if (search(next, done + 1)) return true;
      map_[x] = -1;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  HomOptions opt_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> map_;
  bool fix_first_ = false;
};

}  // namespace

std::optional<Homomorphism> find_homomorphism(const Graph& h, const Graph& g,
                                              const HomOptions& options,
                                              HomSearchStats* stats) {
  if (h.n() == 0) return Homomorphism{};
  if (g.n() == 0) return std::nullopt;
  // On a vertex-transitive target the first image can be taken to be 0.
  bool fix_first = g.vt_known().value_or(false) ||
                   (g.n() <= 64 && is_vertex_transitive(g));
  HomSearch s(h, g, options);
  auto out = s.run(fix_first);
  if (stats) stats->nodes = s.nodes;
  if (out && !is_homomorphism(h, g, out->map)) {
    throw Error(ErrorKind::kInternalInconsistency, "homomorphism check failed");
  }
  return out;
}

Homomorphism cayley_homomorphism(int n, int m, int k, int ell, int s) {
  if (k < 1 || 2 * k >= n || n >= m || ell < 0 || s < 0 ||
      m != ell * n + s * (k + 1)) {
    throw Error(ErrorKind::kInvalidParameter,
                "need m = l*n + s*(k+1) with l, s >= 0 and 2k < n < m");
  }
  Homomorphism out;
  out.map.resize(m);
  for (int x = 0; x < m; ++x) {
    out.map[x] = x < ell * n ? x % n : (x - ell * n) % (k + 1);
  }
  if (!is_homomorphism(make_cayley_cyclic(m, k), make_cayley_cyclic(n, k), out.map)) {
    throw Error(ErrorKind::kInvalidParameter, "constructed map is not a homomorphism");
  }
  return out;
}

}  // namespace relfrac
