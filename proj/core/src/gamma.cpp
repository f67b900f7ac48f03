#include <algorithm>
#include <chrono>
#include <functional>

#include "relfrac/automorphism.hpp"
#include "relfrac/error.hpp"
#include "relfrac/lp.hpp"
#include "relfrac_internal.hpp"

namespace relfrac {

namespace {

// Backtracking for an assignment with every image of size exactly t.
class Gamma0Search {
 public:
  Gamma0Search(const Graph& g, const Graph& h, const Gamma0Options& opt)
      : g_(g), h_(h), opt_(opt), start_(std::chrono::steady_clock::now()) {
    avoid_.reserve(h.n());
    for (int u = 0; u < h.n(); ++u) {
      VertexSet s = h.neighbors(u);
      s.insert(u);
      avoid_.push_back(s.complement());
    }
  }

  std::optional<AssignmentF> solve(int t) {
    t_ = t;
    assigned_.assign(g_.n(), false);
    f_.sets.assign(g_.n(), VertexSet(h_.n()));
    std::vector<VertexSet> allowed(g_.n(), h_.all_vertices());
    if (search(allowed, 0)) return f_;
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  void tick() {
    ++nodes;
    if (nodes > opt_.max_nodes) {
      throw Error(ErrorKind::kUndecided, "assignment search exceeded node cap");
    }
    if ((nodes & 1023) == 0 && opt_.timeout_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count() > opt_.timeout_seconds) {
      throw Error(ErrorKind::kUndecided, "assignment search timed out");
    }
  }

  bool search(std::vector<VertexSet>& allowed, int done) {
    tick();
    if (done == g_.n()) return true;
    int v = -1;
    int room = 0;
    for (int w = 0; w < g_.n(); ++w) {
      if (assigned_[w]) continue;
      int c = allowed[w].count();
      if (c < t_) return false;
      if (v < 0 || c < room) {
        v = w;
        room = c;
      }
    }
    assigned_[v] = true;
    VertexSet chosen(h_.n());
    bool ok = choose(allowed, done, v, chosen, allowed[v], 0);
    assigned_[v] = false;
    return ok;
  }

  // Picks the remaining `t_ - picked` members of f(v) from `cand`.
  bool choose(std::vector<VertexSet>& allowed, int done, int v, VertexSet& chosen,
              const VertexSet& cand, int picked) {
    if (picked == t_) {
      VertexSet keep = chosen;
      VertexSet block = h_.all_vertices();
      keep.for_each([&](int u) { block &= avoid_[u]; });
      std::vector<VertexSet> next = allowed;
      for (int w = 0; w < g_.n(); ++w) {
        if (assigned_[w] || w == v || g_.adjacent(v, w)) continue;
        next[w] &= block;
        if (next[w].count() < t_) return false;
      }
      f_.sets[v] = keep;
      if (search(next, done + 1)) return true;
      f_.sets[v] = VertexSet(h_.n());
      return false;
    }
    if (cand.count() < t_ - picked) return false;
    for (int u = cand.first(); u >= 0; u = cand.next(u)) {
      VertexSet rest = cand;
      rest &= avoid_[u];
      for (int x = 0; x <= u; ++x) rest.erase(x);
      chosen.insert(u);
      bool ok = choose(allowed, done, v, chosen, rest, picked + 1);
      chosen.erase(u);
      if (ok) return true;
      tick();
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  Gamma0Options opt_;
  std::chrono::steady_clock::time_point start_;
  std::vector<VertexSet> avoid_;
  std::vector<bool> assigned_;
  AssignmentF f_;
  int t_ = 0;
};

AssignmentF permute(const AssignmentF& f, const Permutation& sigma) {
  // (f∘σ^{-1})(σ(v)) = f(v)
  AssignmentF out;
  out.sets.resize(f.sets.size());
  for (size_t v = 0; v < f.sets.size(); ++v) out.sets[sigma[v]] = f.sets[v];
  return out;
}

std::vector<DualTerm> merge_terms(std::vector<DualTerm> terms) {
  std::vector<DualTerm> out;
  for (auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const DualTerm& o) { return o.f == t.f; });
    if (it != out.end()) {
      it->beta += t.beta;
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<DualTerm> uniform_over(const AssignmentF& f,
                                   const std::vector<Permutation>& perms) {
  std::vector<DualTerm> terms;
  Rational p(1, static_cast<long>(perms.size()));
  for (const auto& s : perms) terms.push_back({permute(f, s), p});
  return merge_terms(std::move(terms));
}

// Best mixture of the given assignments; empty if it misses the target.
std::vector<DualTerm> mixture_lp(const std::vector<AssignmentF>& fs, int n,
                                 const Rational& target) {
  const int k = static_cast<int>(fs.size());
  LinearProgram lp;
  lp.dim = k + 1;  // p_0..p_{k-1}, then t
  lp.objective.assign(k + 1, Rational());
  lp.objective[k] = Rational(1);
  for (int v = 0; v < n; ++v) {
    LpRow row;
    row.coeffs.assign(k + 1, Rational());
    for (int j = 0; j < k; ++j) row.coeffs[j] = -Rational(fs[j].sets[v].count());
    row.coeffs[k] = Rational(1);
    lp.rows.push_back(std::move(row));
  }
  LpRow mass;
  mass.coeffs.assign(k + 1, Rational(1));
  mass.coeffs[k] = Rational();
  mass.rhs = Rational(1);
  lp.rows.push_back(mass);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal || r.value != target) return {};
  std::vector<DualTerm> terms;
  Rational total;
  for (int j = 0; j < k; ++j) total += r.primal[j];
  for (int j = 0; j < k; ++j) {
    if (!r.primal[j].is_zero()) terms.push_back({fs[j], r.primal[j] / total});
  }
  return merge_terms(std::move(terms));
}

}  // namespace

GammaResult gamma0(const Graph& g, const Graph& h, const Gamma0Options& opt) {
  if (g.n() == 0 || h.n() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "gamma0 needs non-empty graphs");
  }
  RelFracOptions ro;
  ro.timeout_seconds = opt.timeout_seconds;
  const long ag = detail::alpha(g, ro);
  const long ah = detail::alpha(h, ro);
  GammaResult out;
  out.kind = GammaKind::kGamma0;
  Gamma0Search search(g, h, opt);
  for (long t = ah / ag; t >= 1; --t) {
    if (auto f = search.solve(static_cast<int>(t))) {
      out.value = Rational(1, t);
      out.best_assignment = *f;
      out.nodes = search.nodes;
      if (!is_valid_assignment(g, h, *f)) {
        throw Error(ErrorKind::kInternalInconsistency, "gamma0 assignment invalid");
      }
      return out;
    }
  }
  out.extent = Extent::kInfinite;
  out.nodes = search.nodes;
  return out;
}

GammaResult gamma1_certificate(const Graph& g, const Graph& h,
                               const RelFracOptions& opt) {
  GammaResult out;
  out.kind = GammaKind::kGamma1;
  if (g.n() > 0 && is_vertex_transitive(g)) {
    detail::VtOptimum best = detail::vt_optimum(g, h, opt);
    out.nodes = best.nodes;
    out.value = Rational(g.n(), best.alpha);
    const Rational target = out.value.reciprocal();
    std::vector<Permutation> perms;
    if (auto rot = family_rotations(g)) {
      perms = *rot;
    } else {
      auto transversal = transitive_transversal(g);
      if (auto group = close_group(transversal, g.n(), 5000)) {
        perms = *group;
      } else {
        std::vector<AssignmentF> fs;
        for (const auto& s : transversal) fs.push_back(permute(best.f, s));
        out.distribution = mixture_lp(fs, g.n(), target);
      }
    }
    if (!perms.empty()) out.distribution = uniform_over(best.f, perms);
    if (!out.distribution.empty()) {
      verify_distribution(g, h, out.distribution, out.value);
      return out;
    }
  }
  RelFracResult lp = relfrac_lp(g, h, opt);
  out.value = lp.value;
  out.distribution = lp.dual_cert;
  out.nodes = lp.mis_nodes;
  return out;
}

}  // namespace relfrac
