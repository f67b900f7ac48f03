#include "relfrac/generalized.hpp"

#include <algorithm>
#include <chrono>

#include "relfrac/cliques.hpp"
#include "relfrac/error.hpp"
#include "relfrac/lp.hpp"

namespace relfrac {

namespace {

class MultiplicitySearch {
 public:
  MultiplicitySearch(const Graph& g, int k, const GenIndOptions& opt)
      : g_(g), k_(k), opt_(opt), start_(std::chrono::steady_clock::now()) {
    cliques_ = enumerate_maximal_cliques(g, opt.cap);
    member_of_.resize(g.n());
    for (size_t c = 0; c < cliques_.size(); ++c) {
      cliques_[c].for_each([&](int v) { member_of_[v].push_back(static_cast<int>(c)); });
    }
    order_.resize(g.n());
    for (int v = 0; v < g.n(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    residual_.assign(cliques_.size(), k);
    x_.assign(g.n(), 0);
  }

  GenIndResult run() {
    best_x_.assign(g_.n(), 0);
    best_ = 0;
    // Greedy start: fill vertices in order.
    std::vector<int> res = residual_;
    long total = 0;
    for (int v : order_) {
      int ub = k_;
      for (int c : member_of_[v]) ub = std::min(ub, res[c]);
      best_x_[v] = ub;
      total += ub;
      for (int c : member_of_[v]) res[c] -= ub;
    }
    best_ = total;
    if (!(opt_.stop_at && best_ >= *opt_.stop_at)) dfs(0, 0);
    GenIndResult r;
    r.k = k_;
    r.value = best_;
    r.multiplicities = best_x_;
    r.nodes = nodes_;
    return r;
  }

 private:
  long cheap_bound(int idx) const {
    // Cover the remaining vertices greedily by maximal cliques.
    VertexSet left(g_.n());
    for (int i = idx; i < g_.n(); ++i) left.insert(order_[i]);
    long bound = 0;
    while (!left.empty()) {
      int v = left.first();
      int best_c = -1;
      int best_cov = -1;
      for (int c : member_of_[v]) {
        int cov = (cliques_[c] & left).count();
        bool better = best_c < 0 || residual_[c] < residual_[best_c] ||
                      (residual_[c] == residual_[best_c] && cov > best_cov);
        if (better) {
          best_c = c;
          best_cov = cov;
        }
      }
      bound += residual_[best_c];
      left -= cliques_[best_c];
    }
    return bound;
  }

  long lp_bound(int idx) const {
    const int m = g_.n() - idx;
    LinearProgram lp;
    lp.dim = m;
    lp.objective.assign(m, Rational(1));
    std::vector<int> pos(g_.n(), -1);
    for (int i = idx; i < g_.n(); ++i) pos[order_[i]] = i - idx;
    for (size_t c = 0; c < cliques_.size(); ++c) {
      LpRow row;
      row.coeffs.assign(m, Rational());
      bool any = false;
      cliques_[c].for_each([&](int v) {
        if (pos[v] >= 0) {
          row.coeffs[pos[v]] = Rational(1);
          any = true;
        }
      });
      if (!any) continue;
      row.rhs = Rational(residual_[c]);
      lp.rows.push_back(std::move(row));
    }
    LpResult r = solve_lp(lp);
    return r.value.floor().get_si();
  }

  void dfs(int idx, long cur) {
    if ((++nodes_ & 1023) == 0 && opt_.timeout_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count() > opt_.timeout_seconds) {
      throw TimeoutError("generalized independence search timed out",
                         Rational(best_));
    }
    if (idx == g_.n()) {
      if (cur > best_) {
        best_ = cur;
        best_x_ = x_;
      }
      return;
    }
    if (cur + cheap_bound(idx) <= best_) return;
    if (g_.n() - idx >= 2 && cur + lp_bound(idx) <= best_) return;
    const int v = order_[idx];
    int ub = k_;
    for (int c : member_of_[v]) ub = std::min(ub, residual_[c]);
    for (int val = ub; val >= 0; --val) {
      x_[v] = val;
      for (int c : member_of_[v]) residual_[c] -= val;
      dfs(idx + 1, cur + val);
      for (int c : member_of_[v]) residual_[c] += val;
      x_[v] = 0;
      if (opt_.stop_at && best_ >= *opt_.stop_at) return;
    }
  }

  const Graph& g_;
  int k_;
  GenIndOptions opt_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<int>> member_of_;
  std::vector<int> order_;
  std::vector<int> residual_;
  std::vector<int> x_;
  std::vector<int> best_x_;
  long best_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

GenIndResult generalized_independence(const Graph& g, int k,
                                      const GenIndOptions& options) {
  if (k < 1) throw Error(ErrorKind::kInvalidParameter, "k must be >= 1");
  if (g.n() > options.cap) {
    throw Error(ErrorKind::kSizeLimit, "generalized independence limited to " +
                                           std::to_string(options.cap) +
                                           " vertices");
  }
  MultiplicitySearch s(g, k, options);
  return s.run();
}

}  // namespace relfrac
