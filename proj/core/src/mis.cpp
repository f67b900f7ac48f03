#include "relfrac/mis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "relfrac/error.hpp"

namespace relfrac {

namespace {

using Word = VertexSet::Word;
using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  Clock::time_point end;
  bool active = false;

  explicit Deadline(double seconds) {
    if (seconds > 0) {
      active = true;
      end = start + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(seconds));
    }
  }
  bool expired() const { return active && Clock::now() >= end; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
};

struct Expired {};

inline bool any(const Word* a, int words) {
  for (int i = 0; i < words; ++i) {
    if (a[i]) return true;
  }
  return false;
}

inline int first_bit(const Word* a, int words) {
  for (int i = 0; i < words; ++i) {
    if (a[i]) return i * 64 + std::countr_zero(a[i]);
  }
  return -1;
}

// Candidate vertices relabeled 0..n-1 in branching order, with local
// adjacency and non-adjacency rows.
template <class W>
struct Problem {
  int n = 0;
  int words = 0;
  std::vector<int> to_global;
  std::vector<Word> adj;
  std::vector<Word> nonadj;
  std::vector<W> w;

  const Word* adj_row(int v) const { return adj.data() + static_cast<size_t>(v) * words; }
  const Word* nonadj_row(int v) const {
    return nonadj.data() + static_cast<size_t>(v) * words;
  }

  Problem(const Graph& g, const std::vector<W>& weights, const VertexSet& cand) {
    to_global = cand.to_vector();
    n = static_cast<int>(to_global.size());
    std::vector<int> deg(static_cast<size_t>(g.n()), 0);
    for (int v : to_global) deg[v] = (g.neighbors(v) & cand).count();
    std::stable_sort(to_global.begin(), to_global.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    words = VertexSet::word_count(n);
    adj.assign(static_cast<size_t>(n) * words, 0);
    nonadj.assign(static_cast<size_t>(n) * words, 0);
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < n; ++i) local[to_global[i]] = i;
    for (int i = 0; i < n; ++i) {
      Word* a = adj.data() + static_cast<size_t>(i) * words;
      Word* na = nonadj.data() + static_cast<size_t>(i) * words;
      g.neighbors(to_global[i]).for_each([&](int u) {
        int j = local[u];
        if (j >= 0) a[j >> 6] |= Word{1} << (j & 63);
      });
      for (int j = 0; j < n; ++j) {
        if (j != i && !((a[j >> 6] >> (j & 63)) & 1)) {
          na[j >> 6] |= Word{1} << (j & 63);
        }
      }
    }
    w.reserve(static_cast<size_t>(n));
    for (int v : to_global) w.push_back(weights[v]);
  }
};

// Incumbent shared between worker threads (int64 weights only).
struct SharedBest {
  std::mutex mu;
  std::atomic<std::int64_t> value{0};
  std::vector<int> set;
  bool found = false;
};

template <class W>
class Search {
 public:
  Search(const Problem<W>& pb, const Deadline& deadline)
      : pb_(pb), deadline_(deadline) {
    const size_t depth_cap = static_cast<size_t>(pb.n) + 2;
    p_.resize(depth_cap);
    order_.resize(depth_cap);
    bound_.resize(depth_cap);
  }

  W best;
  std::vector<int> best_set;
  bool found = false;
  std::optional<W> stop_at;
  std::uint64_t nodes = 0;
  bool stopped = false;
  SharedBest* shared = nullptr;

  void set_root(const std::vector<int>& fixed, const Word* candidates) {
    stack_ = fixed;
    auto& p = buffer(p_, 0);
    std::copy(candidates, candidates + pb_.words, p.begin());
  }

  void run(W cur) {
    if (!any(p_[0].data(), pb_.words)) {
      consider(cur);
      return;
    }
    expand(0, cur);
  }

  // Explores only root branch i of the depth-0 cover; used by workers.
  void prepare_root(W cur) { root_cover_size_ = cover(0); root_cur_ = cur; }
  int root_cover_size() const { return root_cover_size_; }
  const std::vector<int>& root_order() const { return order_[0]; }
  const std::vector<W>& root_bound() const { return bound_[0]; }

  void run_root_branch(int i, const std::vector<int>& root_ord,
                       const std::vector<W>& root_bd) {
    if (root_cur_ + root_bd[i] <= current_best()) return;
    int v = root_ord[i];
    auto& p0 = p_[0];
    auto& p1 = buffer(p_, 1);
    // Candidates for branch i are order[0..i-1] restricted to non-neighbors.
    std::fill(p1.begin(), p1.end(), 0);
    for (int t = 0; t < i; ++t) {
      int u = root_ord[t];
      p1[u >> 6] |= Word{1} << (u & 63);
    }
    const Word* na = pb_.nonadj_row(v);
    for (int k = 0; k < pb_.words; ++k) p1[k] &= na[k];
    (void)p0;
    stack_.push_back(v);
    if (!any(p1.data(), pb_.words)) {
      consider(root_cur_ + pb_.w[v]);
    } else {
      expand(1, root_cur_ + pb_.w[v]);
    }
    stack_.pop_back();
  }

 private:
  static std::vector<Word>& buffer_words(std::vector<std::vector<Word>>& v,
                                         size_t depth, int words) {
    if (v[depth].size() != static_cast<size_t>(words)) {
      v[depth].assign(static_cast<size_t>(words), 0);
    }
    return v[depth];
  }
  std::vector<Word>& buffer(std::vector<std::vector<Word>>& v, int depth) {
    return buffer_words(v, static_cast<size_t>(depth), pb_.words);
  }

  W current_best() const {
    if constexpr (std::is_same_v<W, std::int64_t>) {
      if (shared) return shared->value.load(std::memory_order_relaxed);
    }
    return best;
  }

  void consider(W value) {
    if (value <= current_best()) return;
    if constexpr (std::is_same_v<W, std::int64_t>) {
      if (shared) {
        std::lock_guard<std::mutex> lock(shared->mu);
        if (value > shared->value.load() ||
            (!shared->found && value >= shared->value.load())) {
          shared->value.store(value);
          shared->set = stack_;
          shared->found = true;
        }
        if (stop_at && value >= *stop_at) stopped = true;
        return;
      }
    }
    best = value;
    best_set = stack_;
    found = true;
    if (stop_at && value >= *stop_at) stopped = true;
  }

  // Greedy clique cover of p_[depth]; fills order_/bound_ and returns the
  // number of covered vertices.
  int cover(int depth) {
    const int words = pb_.words;
    auto& ord = order_[depth];
    auto& bd = bound_[depth];
    if (ord.size() < static_cast<size_t>(pb_.n)) {
      ord.resize(static_cast<size_t>(pb_.n));
      bd.resize(static_cast<size_t>(pb_.n));
    }
    uncovered_.assign(p_[depth].begin(), p_[depth].end());
    q_.resize(static_cast<size_t>(words));
    int cnt = 0;
    W cum = W(0);
    Word* u = uncovered_.data();
    Word* q = q_.data();
    while (any(u, words)) {
      std::copy(u, u + words, q);
      W class_max = W(0);
      int start = cnt;
      int v;
      while ((v = first_bit(q, words)) >= 0) {
        u[v >> 6] &= ~(Word{1} << (v & 63));
        const Word* a = pb_.adj_row(v);
        for (int k = 0; k < words; ++k) q[k] &= a[k];
        ord[cnt++] = v;
        if (pb_.w[v] > class_max) class_max = pb_.w[v];
      }
      cum += class_max;
      for (int t = start; t < cnt; ++t) bd[t] = cum;
    }
    return cnt;
  }

  void expand(int depth, W cur) {
    ++nodes;
    if ((nodes & 1023) == 0 && deadline_.expired()) throw Expired{};
    const int words = pb_.words;
    const int cnt = cover(depth);
    auto& p = p_[depth];
    auto& child = buffer(p_, depth + 1);
    for (int i = cnt - 1; i >= 0; --i) {
      if (cur + bound_[depth][i] <= current_best()) return;
      const int v = order_[depth][i];
      const Word* na = pb_.nonadj_row(v);
      bool nonempty = false;
      for (int k = 0; k < words; ++k) {
        child[k] = p[k] & na[k];
        nonempty |= child[k] != 0;
      }
      stack_.push_back(v);
      if (!nonempty) {
        consider(cur + pb_.w[v]);
      } else {
        expand(depth + 1, cur + pb_.w[v]);
      }
      stack_.pop_back();
      if (stopped) return;
      p[v >> 6] &= ~(Word{1} << (v & 63));
    }
  }

  const Problem<W>& pb_;
  const Deadline& deadline_;
  std::vector<std::vector<Word>> p_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<W>> bound_;
  std::vector<Word> uncovered_;
  std::vector<Word> q_;
  std::vector<int> stack_;
  int root_cover_size_ = 0;
  W root_cur_ = W(0);
};

template <class W>
struct Outcome {
  bool found = false;
  W value = W(0);
  std::vector<int> set;  // global ids
  std::uint64_t nodes = 0;
};

// Thrown out of solve_core when the deadline passes; carries the incumbent.
template <class W>
struct ExpiredWith {
  W best;
};

// Best independent set inside `cand` (plus `fixed`, which must be pairwise
// non-adjacent and non-adjacent to cand). With `threshold`, only sets of
// value >= threshold count and the search stops at the first one.
template <class W>
Outcome<W> solve_core(const Graph& g, const std::vector<W>& w,
                      const VertexSet& cand, const std::vector<int>& fixed,
                      std::optional<W> threshold, std::optional<W> stop_at,
                      const std::vector<int>& initial, const Deadline& deadline,
                      int threads) {
  Problem<W> pb(g, w, cand);
  W fixed_value = W(0);
  for (int v : fixed) fixed_value += w[v];
  std::vector<int> local(static_cast<size_t>(g.n()), -1);
  for (int i = 0; i < pb.n; ++i) local[pb.to_global[i]] = i;

  Outcome<W> out;
  W start_best = W(0);
  std::vector<int> start_set;
  bool have_start = false;
  if (threshold) {
    start_best = *threshold - W(1);
  } else {
    W init_value = W(0);
    std::vector<int> init_local;
    for (int v : initial) {
      if (local[v] >= 0) {
        init_local.push_back(local[v]);
        init_value += w[v];
      }
    }
    start_best = fixed_value + init_value;
    start_set = init_local;
    have_start = true;
  }
  std::optional<W> stop = threshold ? threshold : stop_at;
  std::vector<Word> all(static_cast<size_t>(pb.words), 0);
  for (int i = 0; i < pb.n; ++i) all[i >> 6] |= Word{1} << (i & 63);

  auto finish = [&](bool found, W value, const std::vector<int>& local_set) {
    out.found = found;
    out.value = value;
    out.set = fixed;
    for (int v : local_set) out.set.push_back(pb.to_global[v]);
    std::sort(out.set.begin(), out.set.end());
  };
  bool already_done = stop && have_start && start_best >= *stop;
  if (already_done) {
    finish(true, start_best, start_set);
    return out;
  }

  if constexpr (std::is_same_v<W, std::int64_t>) {
    if (threads > 1 && pb.n > 64) {
      SharedBest shared;
      shared.value = start_best;
      shared.set = start_set;
      shared.found = have_start;
      Search<W> root(pb, deadline);
      root.set_root({}, all.data());
      root.prepare_root(fixed_value);
      const int cnt = root.root_cover_size();
      std::vector<int> ord(root.root_order().begin(),
                           root.root_order().begin() + cnt);
      std::vector<W> bd(root.root_bound().begin(), root.root_bound().begin() + cnt);
      std::atomic<int> next{cnt - 1};
      std::atomic<bool> expired{false};
      std::atomic<std::uint64_t> nodes{0};
      std::atomic<bool> stop_flag{false};
      auto worker = [&]() {
        Search<W> s(pb, deadline);
        s.shared = &shared;
        s.stop_at = stop;
        s.set_root({}, all.data());
        s.prepare_root(fixed_value);
        try {
          while (!stop_flag.load()) {
            int i = next.fetch_sub(1);
            if (i < 0) break;
            s.run_root_branch(i, ord, bd);
            if (s.stopped) stop_flag = true;
          }
        } catch (const Expired&) {
          expired = true;
          stop_flag = true;
        }
        nodes += s.nodes;
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      out.nodes = nodes.load();
      if (expired) throw ExpiredWith<W>{shared.found ? shared.value.load() : W(0)};
      finish(shared.found, shared.value.load(), shared.set);
      return out;
    }
  }

  Search<W> s(pb, deadline);
  s.best = start_best;
  s.best_set = start_set;
  s.found = have_start;
  s.stop_at = stop;
  s.set_root({}, all.data());
  try {
    s.run(fixed_value);
  } catch (const Expired&) {
    throw ExpiredWith<W>{s.found ? s.best : W(0)};
  }
  out.nodes = s.nodes;
  finish(s.found, s.best, s.best_set);
  return out;
}

template <class W>
W to_w(const mpz_class& z) {
  if constexpr (std::is_same_v<W, std::int64_t>) {
    return static_cast<std::int64_t>(z.get_si());
  } else {
    return z;
  }
}

template <class W>
mpz_class from_w(const W& v) {
  if constexpr (std::is_same_v<W, std::int64_t>) {
    return mpz_class(std::to_string(v));
  } else {
    return v;
  }
}

template <class W>
MisResult solve_scaled(const Graph& g, const std::vector<W>& w,
                       const mpz_class& scale, const MisOptions& opt) {
  Deadline deadline(opt.timeout_seconds);
  MisResult result;
  result.witness = VertexSet(g.n());
  VertexSet cand(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (w[v] > W(0)) cand.insert(v);
  }
  auto to_rational = [&](const W& v) { return Rational(from_w(v), scale); };

  std::vector<int> initial;
  if (opt.initial) {
    if (opt.initial->universe() != g.n() || !is_independent(g, *opt.initial)) {
      throw Error(ErrorKind::kInvalidArgument, "initial set is not independent");
    }
    initial = opt.initial->to_vector();
  } else {
    // Static greedy: heavier first, then fewer neighbors.
    std::vector<int> order = cand.to_vector();
    std::vector<int> deg(static_cast<size_t>(g.n()), 0);
    for (int v : order) deg[v] = g.degree(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (w[a] != w[b]) return w[a] > w[b];
      return deg[a] < deg[b];
    });
    VertexSet greedy(g.n());
    VertexSet blocked(g.n());
    for (int v : order) {
      if (blocked.contains(v)) continue;
      greedy.insert(v);
      blocked |= g.neighbors(v);
    }
    initial = greedy.to_vector();
  }

  std::optional<W> stop_at;
  if (opt.stop_at) {
    Rational scaled = *opt.stop_at * Rational(scale);
    stop_at = to_w<W>(scaled.ceil());
  }

  std::uint64_t nodes = 0;
  Outcome<W> best;
  if (stop_at && opt.initial) {
    W have = W(0);
    for (int v : initial) have += w[v];
    // the incumbent already meets the target; fixing vertex 0 below could
    // discard part of it
    if (have >= *stop_at) {
      for (int v : initial) result.witness.insert(v);
      result.value = to_rational(have);
      result.stats.elapsed_ms = deadline.elapsed_ms();
      return result;
    }
  }
  try {
    std::vector<int> fixed;
    VertexSet root = cand;
    bool fix_zero = opt.assume_vertex_transitive && cand.contains(0);
    if (fix_zero) {
      fixed.push_back(0);
      root -= g.neighbors(0);
      root.erase(0);
      std::erase_if(initial, [&](int v) { return !root.contains(v); });
    }
    best = solve_core<W>(g, w, root, fixed, std::nullopt, stop_at, initial,
                         deadline, opt.threads);
    nodes += best.nodes;
    if (!best.found) {
      // Fixed set alone (or the empty set) is optimal.
      best.found = true;
    }

    bool canonical = opt.canonical_witness && !(stop_at && best.value >= *stop_at);
    if (canonical && best.value > W(0)) {
      // Greedy lexicographic extraction: include v whenever an optimal set
      // extending the current prefix still exists.
      const W target = best.value;
      W have = W(0);
      VertexSet pool = cand;
      std::vector<int> chosen;
      for (int v = 0; v < g.n() && have < target; ++v) {
        if (!pool.contains(v)) continue;
        VertexSet rest = pool;
        rest -= g.neighbors(v);
        for (int u = 0; u <= v; ++u) rest.erase(u);
        W need = target - have - w[v];
        bool ok = need <= W(0);
        if (!ok) {
          Outcome<W> d = solve_core<W>(g, w, rest, {}, need, std::nullopt, {},
                                       deadline, opt.threads);
          nodes += d.nodes;
          ok = d.found;
        }
        pool.erase(v);
        if (ok) {
          chosen.push_back(v);
          have += w[v];
          pool = rest;
        }
      }
      if (have != target) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "canonical witness extraction lost optimality");
      }
      best.set = chosen;
    }
  } catch (const ExpiredWith<W>& e) {
    throw TimeoutError("independent set search timed out after " +
                           std::to_string(deadline.elapsed_ms()) + " ms",
                       to_rational(std::max(e.best, best.value)));
  }
  for (int v : best.set) result.witness.insert(v);
  W total = W(0);
  for (int v : best.set) total += w[v];
  result.value = to_rational(total);
  result.stats.nodes = nodes;
  result.stats.elapsed_ms = deadline.elapsed_ms();
  return result;
}

}  // namespace

MisResult max_weight_independent_set(const Graph& g, const WeightMap& w,
                                     const MisOptions& options) {
  if (static_cast<int>(w.size()) != g.n()) {
    throw Error(ErrorKind::kInvalidArgument, "weight vector length mismatch");
  }
  for (const auto& x : w) {
    if (x.sign() < 0) throw Error(ErrorKind::kInvalidArgument, "negative weight");
  }
  mpz_class scale = lcm_of_denominators(w);
  std::vector<mpz_class> ints;
  mpz_class total = 0;
  for (const auto& x : w) {
    ints.push_back(x.num() * (scale / x.den()));
    total += ints.back();
  }
  if (total < mpz_class("4000000000000000000")) {
    std::vector<std::int64_t> w64;
    for (const auto& z : ints) w64.push_back(to_w<std::int64_t>(z));
    return solve_scaled<std::int64_t>(g, w64, scale, options);
  }
  return solve_scaled<mpz_class>(g, ints, scale, options);
}

MisResult max_independent_set(const Graph& g, const MisOptions& options) {
  std::vector<std::int64_t> ones(static_cast<size_t>(g.n()), 1);
  return solve_scaled<std::int64_t>(g, ones, mpz_class(1), options);
}

MisResult brute_force_mis(const Graph& g) {
  if (g.n() > 20) throw Error(ErrorKind::kSizeLimit, "brute force needs n <= 20");
  const int n = g.n();
  std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    g.neighbors(v).for_each([&](int u) { adj[v] |= 1u << u; });
  }
  int best = 0;
  std::uint32_t best_mask = 0;
  std::uint64_t scanned = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ++scanned;
    int size = std::popcount(mask);
    if (size < best) continue;
    bool ok = true;
    for (std::uint32_t m = mask; m && ok; m &= m - 1) {
      ok = (adj[std::countr_zero(m)] & mask) == 0;
    }
    if (!ok) continue;
    // Equal sizes: the set owning the smallest differing vertex is
    // lexicographically smaller.
    if (size > best) {
      best = size;
      best_mask = mask;
    } else if ((mask ^ best_mask) & mask & ~((mask ^ best_mask) - 1)) {
      best_mask = mask;
    }
  }
  MisResult r;
  r.witness = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (best_mask >> v & 1) r.witness.insert(v);
  }
  r.value = Rational(best);
  r.stats.nodes = scanned;
  return r;
}

VertexSet greedy_independent_set(const Graph& g) {
  VertexSet out(g.n());
  VertexSet avail = g.all_vertices();
  while (!avail.empty()) {
    int pick = -1;
    int pick_deg = 0;
    avail.for_each([&](int v) {
      int d = (g.neighbors(v) & avail).count();
      if (pick < 0 || d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    out.insert(pick);
    avail -= g.neighbors(pick);
    avail.erase(pick);
  }
  return out;
}

VertexSet local_search_independent_set(const Graph& g, const VertexSet& start,
                                       const LocalSearchOptions& opt) {
  const int n = g.n();
  if (!is_independent(g, start)) {
    throw Error(ErrorKind::kInvalidArgument, "start set is not independent");
  }
  if (n == 0) return start;
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v).to_vector();
  std::vector<char> in(n, 0);
  std::vector<int> tight(n, 0);  // solution neighbors of each vertex
  int size = 0;
  auto add = [&](int v) {
    in[v] = 1;
    ++size;
    for (int u : nb[v]) ++tight[u];
  };
  auto drop = [&](int v) {
    in[v] = 0;
    --size;
    for (int u : nb[v]) --tight[u];
  };
  start.for_each(add);
  std::mt19937 rng(opt.seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto fill = [&] {
    std::shuffle(order.begin(), order.end(), rng);
    for (int v : order) {
      if (!in[v] && tight[v] == 0) add(v);
    }
  };
  // swap one solution vertex for two non-adjacent vertices that only it blocks
  auto two_improve = [&] {
    std::vector<int> cand;
    for (bool again = true; again;) {
      again = false;
      for (int x = 0; x < n && !again; ++x) {
        if (!in[x]) continue;
        cand.clear();
        for (int u : nb[x]) {
          if (!in[u] && tight[u] == 1) cand.push_back(u);
        }
        for (size_t i = 0; i < cand.size() && !again; ++i) {
          for (size_t j = i + 1; j < cand.size(); ++j) {
            if (g.adjacent(cand[i], cand[j])) continue;
            drop(x);
            add(cand[i]);
            add(cand[j]);
            fill();
            again = true;
            break;
          }
        }
      }
    }
  };
  fill();
  two_improve();
  std::vector<char> best = in;
  int best_size = size;
  Deadline deadline(opt.timeout_seconds);
  for (long it = 0; it < opt.iterations; ++it) {
    if (opt.target && best_size >= *opt.target) break;
    if (best_size == n || deadline.expired()) break;
    int v;
    do {
      v = static_cast<int>(rng() % n);
    } while (in[v]);
    for (int u : nb[v]) {
      if (in[u]) drop(u);
    }
    add(v);
    fill();
    two_improve();
    if (size > best_size) {
      best = in;
      best_size = size;
    } else if (size < best_size && rng() % 4 != 0) {
      for (int u = 0; u < n; ++u) {
        if (in[u]) drop(u);
      }
      for (int u = 0; u < n; ++u) {
        if (best[u]) add(u);
      }
    }
  }
  VertexSet out(n);
  for (int u = 0; u < n; ++u) {
    if (best[u]) out.insert(u);
  }
  return out.count() >= start.count() ? out : start;
}

}  // namespace relfrac
