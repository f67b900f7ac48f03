#include "relfrac/expand.hpp"

#include <algorithm>
#include <map>

#include "relfrac/cliques.hpp"
#include "relfrac/error.hpp"
#include "relfrac/generalized.hpp"
#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"

namespace relfrac {

namespace {

// Mutable labelled graph used while replaying a script.
struct Workspace {
  std::vector<std::vector<char>> adj;
  std::vector<char> live;
  std::vector<int> origin;

  Workspace(const Graph& h, int extra) {
    const int cap = h.n() + extra;
    adj.assign(cap, std::vector<char>(cap, 0));
    live.assign(cap, 0);
    origin.assign(cap, -1);
    for (int v = 0; v < h.n(); ++v) {
      live[v] = 1;
      origin[v] = v;
    }
    for (auto [a, b] : h.edges()) adj[a][b] = adj[b][a] = 1;
  }
  int next = 0;
  bool is_live(int v) const {
    return v >= 0 && v < static_cast<int>(live.size()) && live[v];
  }
};

}  // namespace

ExpandResult apply_expand(const Graph& h, const ExpandScript& script) {
  long extra = 0;
  for (const auto& op : script.ops) {
    if (op.kind == ExpandOp::Kind::kClique && op.size > 0) extra += op.size;
  }
  if (extra > 1'000'000) throw ScriptError(0, "script creates too many vertices");
  Workspace ws(h, static_cast<int>(extra));
  ws.next = h.n();
  for (size_t i = 0; i < script.ops.size(); ++i) {
    const auto& op = script.ops[i];
    const int step = static_cast<int>(i);
    switch (op.kind) {
      case ExpandOp::Kind::kRemove:
        if (!ws.is_live(op.v)) throw ScriptError(step, "remove: no vertex " + std::to_string(op.v));
        ws.live[op.v] = 0;
        break;
      case ExpandOp::Kind::kClique: {
        if (!ws.is_live(op.v)) throw ScriptError(step, "clique: no vertex " + std::to_string(op.v));
        if (op.size < 1) throw ScriptError(step, "clique size must be >= 1");
        const int first = ws.next;
        for (int c = 0; c < op.size; ++c) {
          const int x = ws.next++;
          ws.live[x] = 1;
          ws.origin[x] = ws.origin[op.v];
          for (int y = 0; y < first; ++y) {
            if (ws.live[y] && ws.adj[op.v][y]) ws.adj[x][y] = ws.adj[y][x] = 1;
          }
          for (int y = first; y < x; ++y) ws.adj[x][y] = ws.adj[y][x] = 1;
        }
        ws.live[op.v] = 0;
        break;
      }
      case ExpandOp::Kind::kEdge:
        if (!ws.is_live(op.u) || !ws.is_live(op.w)) {
          throw ScriptError(step, "edge: endpoint not present");
        }
        if (op.u == op.w) throw ScriptError(step, "edge: endpoints must differ");
        if (ws.adj[op.u][op.w]) throw ScriptError(step, "edge: already present");
        ws.adj[op.u][op.w] = ws.adj[op.w][op.u] = 1;
        break;
    }
  }
  ExpandResult out;
  for (int x = 0; x < ws.next; ++x) {
    if (ws.live[x]) {
      out.labels.push_back(x);
      out.origin.push_back(ws.origin[x]);
    }
  }
  const int k = static_cast<int>(out.labels.size());
  out.graph = Graph(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (ws.adj[out.labels[a]][out.labels[b]]) out.graph.add_edge(a, b);
    }
  }
  return out;
}

bool replay_matches(const Graph& h, const Graph& g, const ExpandCertificate& cert) {
  ExpandResult r = apply_expand(h, cert.script);
  if (r.graph.n() != g.n() || static_cast<int>(cert.label_of.size()) != g.n()) {
    return false;
  }
  std::map<int, int> final_id;
  for (int i = 0; i < r.graph.n(); ++i) final_id[r.labels[i]] = i;
  std::vector<int> pos(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto it = final_id.find(cert.label_of[v]);
    if (it == final_id.end()) return false;
    pos[v] = it->second;
  }
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.adjacent(a, b) != r.graph.adjacent(pos[a], pos[b])) return false;
    }
  }
  return true;
}

std::optional<ExpandCertificate> in_expand_certificate(const Graph& h, const Graph& g,
                                                       const HomOptions& options) {
  auto phi = find_homomorphism(complement(g), complement(h), options);
  if (!phi) return std::nullopt;
  ExpandCertificate cert;
  cert.script.normal_form = true;
  cert.label_of.assign(g.n(), -1);
  std::vector<std::vector<int>> fibre(h.n());
  for (int v = 0; v < g.n(); ++v) fibre[phi->map[v]].push_back(v);
  for (int u = 0; u < h.n(); ++u) {
    if (fibre[u].empty()) cert.script.ops.push_back(ExpandOp::remove(u));
  }
  int next = h.n();
  for (int u = 0; u < h.n(); ++u) {
    if (fibre[u].empty()) continue;
    if (fibre[u].size() == 1) {
      cert.label_of[fibre[u][0]] = u;
      continue;
    }
    cert.script.ops.push_back(ExpandOp::clique(u, static_cast<int>(fibre[u].size())));
    for (int v : fibre[u]) cert.label_of[v] = next++;
  }
  for (auto [a, b] : g.edges()) {
    const int pa = phi->map[a];
    const int pb = phi->map[b];
    if (pa == pb || h.adjacent(pa, pb)) continue;
    cert.script.ops.push_back(ExpandOp::edge(cert.label_of[a], cert.label_of[b]));
  }
  if (!replay_matches(h, g, cert)) {
    throw Error(ErrorKind::kInternalInconsistency, "expand script replay mismatch");
  }
  return cert;
}

std::optional<ExpandScript> in_expand(const Graph& h, const Graph& g,
                                      const HomOptions& options) {
  auto cert = in_expand_certificate(h, g, options);
  if (!cert) return std::nullopt;
  return cert->script;
}

bool expand_feasibility_prefilter(const Graph& h, const Graph& g) {
  if (g.n() == 0) return true;
  if (h.n() == 0) return false;
  const int omega = clique_number(g);
  GenIndOptions opt;
  opt.stop_at = g.n();
  opt.cap = std::max(40, h.n());
  return generalized_independence(h, omega, opt).value >= g.n();
}

DerivedExpand derive_expand_from_independent_set(const Graph& g, const Graph& h,
                                                 const VertexSet& s) {
  Graph product = strong_product(complement(g), h);
  if (s.universe() != product.n() || !is_independent(product, s)) {
    throw Error(ErrorKind::kInvalidArgument,
                "set is not independent in complement(G) ⊠ H");
  }
  AssignmentF f = assignment_from_product_set(g, h, s);
  DerivedExpand out;
  VertexSet used_h(h.n());
  for (int v = 0; v < g.n(); ++v) {
    if (!f.sets[v].empty()) out.g_vertices.push_back(v);
    used_h |= f.sets[v];
  }
  out.h_vertices = used_h.to_vector();
  out.g_prime = induced_subgraph(g, out.g_vertices);
  out.h_prime = induced_subgraph(h, out.h_vertices);
  std::vector<int> h_local(h.n(), -1);
  for (size_t i = 0; i < out.h_vertices.size(); ++i) h_local[out.h_vertices[i]] = static_cast<int>(i);

  const int gp = out.g_prime.n();
  const int hp = out.h_prime.n();
  // users[u]: vertices of g_prime whose image contains u.
  std::vector<std::vector<int>> users(hp);
  for (int i = 0; i < gp; ++i) {
    f.sets[out.g_vertices[i]].for_each([&](int u) { users[h_local[u]].push_back(i); });
  }
  // Labels are tracked alongside a live adjacency to emit merges correctly.
  ExpandScript& script = out.script;
  script.normal_form = false;
  std::vector<std::vector<int>> copies(gp);
  int next = hp;
  for (int u = 0; u < hp; ++u) {
    if (users[u].size() == 1) {
      copies[users[u][0]].push_back(u);
      continue;
    }
    script.ops.push_back(ExpandOp::clique(u, static_cast<int>(users[u].size())));
    for (int i : users[u]) copies[i].push_back(next++);
  }
  // Replay so far to know current adjacency among labels.
  ExpandResult stage = apply_expand(out.h_prime, script);
  std::map<int, int> pos;
  for (int i = 0; i < stage.graph.n(); ++i) pos[stage.labels[i]] = i;
  auto adjacent = [&](int a, int b) { return stage.graph.adjacent(pos[a], pos[b]); };
  std::vector<std::vector<char>> added(stage.graph.n(),
                                       std::vector<char>(stage.graph.n(), 0));
  auto linked = [&](int a, int b) {
    return adjacent(a, b) || added[pos[a]][pos[b]];
  };
  std::vector<int> label_of(gp);
  std::vector<char> removed(stage.graph.n(), 0);
  for (int i = 0; i < gp; ++i) {
    const int keep = copies[i][0];
    label_of[i] = keep;
    for (size_t c = 1; c < copies[i].size(); ++c) {
      const int drop = copies[i][c];
      for (int x = 0; x < stage.graph.n(); ++x) {
        const int lx = stage.labels[x];
        if (lx == keep || lx == drop || removed[x]) continue;
        if (linked(drop, lx) && !linked(keep, lx)) {
          script.ops.push_back(ExpandOp::edge(keep, lx));
          added[pos[keep]][pos[lx]] = added[pos[lx]][pos[keep]] = 1;
        }
      }
      script.ops.push_back(ExpandOp::remove(drop));
      removed[pos[drop]] = 1;
    }
  }
  for (auto [a, b] : out.g_prime.edges()) {
    if (!linked(label_of[a], label_of[b])) {
      script.ops.push_back(ExpandOp::edge(label_of[a], label_of[b]));
      added[pos[label_of[a]]][pos[label_of[b]]] = 1;
      added[pos[label_of[b]]][pos[label_of[a]]] = 1;
    }
  }
  ExpandCertificate cert{script, label_of};
  if (!replay_matches(out.h_prime, out.g_prime, cert)) {
    throw Error(ErrorKind::kInternalInconsistency, "derived script replay mismatch");
  }
  return out;
}

std::optional<std::vector<VertexSet>> clique_partition_perfect(const Graph& g,
                                                               double timeout_seconds) {
  std::vector<int> color = exact_coloring(complement(g), timeout_seconds);
  int k = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
  MisOptions mo;
  mo.timeout_seconds = timeout_seconds;
  mo.canonical_witness = false;
  if (k != max_independent_set(g, mo).size()) return std::nullopt;
  std::vector<VertexSet> blocks(k, VertexSet(g.n()));
  for (int v = 0; v < g.n(); ++v) blocks[color[v]].insert(v);
  return blocks;
}

}  // namespace relfrac
