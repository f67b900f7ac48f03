// relfrac command-line front end. JSON report on stdout, summary on stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "relfrac/automorphism.hpp"
#include "relfrac/cliques.hpp"
#include "relfrac/error.hpp"
#include "relfrac/expand.hpp"
#include "relfrac/generalized.hpp"
#include "relfrac/graph_io.hpp"
#include "relfrac/homomorphism.hpp"
#include "relfrac/mis.hpp"
#include "relfrac/relfrac.hpp"
#include "relfrac/serialize.hpp"

using namespace relfrac;

namespace {

enum Exit { kOk = 0, kUsage = 2, kTimedOut = 3, kMismatch = 4, kUndecidedExit = 5 };

struct Settings {
  double timeout = 300.0;
  int max_product = 5000;
  int threads = 1;
  bool approx = false;
  bool no_timing = false;
  std::string cert_prefix;
  std::string format = "edges";

  RelFracOptions relfrac_options() const {
    RelFracOptions o;
    o.timeout_seconds = timeout;
    o.threads = threads;
    o.max_product_vertices = max_product;
    return o;
  }
  MisOptions mis_options() const {
    MisOptions o;
    o.timeout_seconds = timeout;
    o.threads = threads;
    return o;
  }
  HomOptions hom_options() const {
    HomOptions o;
    o.timeout_seconds = timeout;
    return o;
  }
};

// Thrown for bad command-line input that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised after the report is complete when values disagree.
struct Mismatch {};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& inputs() { return doc_["inputs"]; }
  Json& result() { return doc_["result"]; }
  Json& stats() { return doc_["stats"]; }
  void method(const std::string& m) { doc_["method"] = m; }

  // Certificates go inline unless a prefix is given, in which case each is
  // written to <prefix>.<name>.json and the path is recorded.
  void certificate(const std::string& name, const Json& body, const Settings& s) {
    if (s.cert_prefix.empty()) {
      doc_["certificates"][name] = body;
      return;
    }
    std::string path = s.cert_prefix + "." + name + ".json";
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write certificate file " + path);
    out << body.dump(2) << "\n";
    doc_["certificates"][name] = path;
  }

  void error(const std::string& kind, const std::string& message) {
    doc_["error"] = Json{{"kind", kind}, {"message", message}};
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  Json& error_slot() { return doc_["error"]; }

  void finish(double elapsed_ms, bool no_timing) {
    doc_["elapsed_ms"] = no_timing ? 0 : static_cast<long long>(elapsed_ms);
    if (!doc_.contains("stats")) doc_["stats"] = Json::object();
    std::cout << doc_.dump(2) << "\n";
  }

 private:
  Json doc_;
};

void put_value(Json& slot, const std::string& key, const Rational& r, const Settings& s) {
  slot[key] = r.str();
  if (s.approx) slot[key + "_approx"] = r.decimal(6);
}

Graph load_graph_arg(const std::string& arg) {
  if (auto g = graph_from_spec(arg)) return *g;
  std::ifstream probe(arg);
  if (!probe) throw UsageError("'" + arg + "' is neither a graph spec nor a readable file");
  return load_graph_file(arg);
}

Json graph_input(const std::string& arg, const Graph& g) {
  return Json{{"source", arg}, {"n", g.n()}, {"edges", g.num_edges()}};
}

// ---------------------------------------------------------------------------
// Commands

void cmd_make(Report& rep, const Settings& s, const std::vector<std::string>& args,
              const std::string& output) {
  if (args.empty()) throw UsageError("make needs a spec");
  std::string op = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  // "sprod/a/b" is accepted as a shorthand for "sprod a b"; paths with
  // slashes need the spaced form for union and sprod.
  if (auto slash = op.find('/'); rest.empty() && slash != std::string::npos) {
    std::string head = op.substr(0, slash), tail = op.substr(slash + 1);
    if (head == "complement") {
      rest = {tail};
    } else if (head == "spower" && tail.rfind('/') != std::string::npos) {
      auto cut = tail.rfind('/');
      rest = {tail.substr(0, cut), tail.substr(cut + 1)};
    } else if ((head == "union" || head == "sprod") &&
               std::count(tail.begin(), tail.end(), '/') == 1) {
      auto cut = tail.find('/');
      rest = {tail.substr(0, cut), tail.substr(cut + 1)};
    } else if (head == "union" || head == "sprod" || head == "spower") {
      throw UsageError("write '" + head + " X Y' with spaces when paths contain '/'");
    }
    if (!rest.empty()) op = head;
  }
  rep.inputs() = Json{{"spec", args}};
  Graph g;
  auto need = [&](size_t k) {
    if (rest.size() != k) {
      throw UsageError(op + " takes " + std::to_string(k) + " argument(s)");
    }
  };
  if (op == "complement") {
    need(1);
    g = complement(load_graph_arg(rest[0]));
  } else if (op == "union") {
    need(2);
    g = disjoint_union(load_graph_arg(rest[0]), load_graph_arg(rest[1]));
  } else if (op == "sprod") {
    need(2);
    g = strong_product(load_graph_arg(rest[0]), load_graph_arg(rest[1]));
  } else if (op == "spower") {
    need(2);
    int d = 0;
    try {
      d = std::stoi(rest[1]);
    } catch (const std::exception&) {
      throw UsageError("spower exponent must be an integer");
    }
    g = strong_power(load_graph_arg(rest[0]), d);
  } else {
    if (!rest.empty()) throw UsageError("unexpected arguments after " + op);
    auto made = graph_from_spec(op);
    if (!made) throw UsageError("unknown graph spec '" + op + "'");
    g = *made;
  }
  GraphFormat fmt = s.format == "json" ? GraphFormat::kJson : GraphFormat::kEdgeList;
  std::string text = serialize_graph(g, fmt);
  if (output.empty()) {
    std::cerr << text;
  } else {
    save_graph_file(g, output, fmt);
  }
  rep.result() = Json{{"n", g.n()}, {"edges", g.num_edges()}};
  if (g.family()) rep.result()["family"] = g.family()->str();
  if (!output.empty()) rep.result()["written"] = output;
  else rep.result()["graph"] = graph_to_json(g);
  std::cerr << "graph with " << g.n() << " vertices and " << g.num_edges() << " edges\n";
}

void cmd_relfrac(Report& rep, const Settings& s, const std::string& ga, const std::string& ha,
                 const std::string& method, bool cross, bool want_witness, bool want_cert) {
  Graph g = load_graph_arg(ga), h = load_graph_arg(ha);
  auto choice = parse_method_choice(method);
  if (!choice) throw UsageError("--method must be auto, lp, vt or closed");
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"H", graph_input(ha, h)}, {"method", method},
                      {"cross_check", cross}};
  auto opt = s.relfrac_options();
  RelFracResult r = relfrac::relfrac(g, h, *choice, cross, opt);
  rep.method(method_name(r.method));
  put_value(rep.result(), "value", r.value, s);
  Json w = Json::array();
  for (const auto& x : r.weights) w.push_back(x.str());
  rep.result()["weights"] = w;
  if (r.cross_check_method) {
    rep.result()["cross_check"] = Json{{"method", method_name(*r.cross_check_method)},
                                       {"value", r.cross_check_value->str()}};
  }
  rep.stats() = Json{{"lp_iterations", r.lp_iterations}, {"mis_nodes", r.mis_nodes}};
  if (!r.dual_cert.empty()) rep.certificate("dual", to_json(r.dual_cert), s);
  if (want_witness) {
    Graph wg = maximizer_witness(g, h, opt);
    rep.certificate("witness", graph_to_json(wg), s);
  }
  if (want_cert) {
    GammaResult g1 = gamma1_certificate(g, h, opt);
    rep.certificate("gamma1", to_json(g1), s);
  }
  std::cerr << "alpha*(G|H) = " << r.value << " via " << method_name(r.method) << "\n";
}

struct Row {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok;
};

void push_row(std::vector<Row>& rows, std::string name, const Rational& want, const Rational& got) {
  rows.push_back({std::move(name), want.str(), got.str(), want == got});
}

void cmd_table1(Report& rep, const Settings& s, bool big) {
  auto opt = s.relfrac_options();
  std::vector<Row> rows;
  auto val = [&](const Graph& g, const Graph& h) { return relfrac::relfrac(g, h, MethodChoice::kAuto, false, opt).value; };

  push_row(rows, "Cay(Z5,1)|Cay(Z13,1)", Rational(5, 13), val(make_cycle(5), make_cycle(13)));
  push_row(rows, "Cay(Z9,1..3)|C9", Rational(1, 2), val(make_cayley_cyclic(9, 3), make_cycle(9)));
  {
    Graph c7 = make_cycle(7), t = make_cayley_cyclic(10, 2);
    push_row(rows, "Cay(Z10,1..2)|C7", Rational(1), val(t, c7));
    auto cert = in_expand_certificate(c7, t, s.hom_options());
    bool ok = cert && replay_matches(c7, t, *cert);
    rows.push_back({"Cay(Z10,1..2) in Expand(C7)", "script", ok ? "script" : "none", ok});
    if (cert) rep.certificate("expand_c7_cay10", to_json(cert->script), s);
  }
  push_row(rows, "C3|J(6,3)", Rational(1, 4), val(make_cycle(3), make_johnson3(6)));
  {
    Graph c8 = make_cycle(8), j = make_johnson3(15);
    GammaResult g1 = gamma1_certificate(c8, j, opt);
    push_row(rows, "Gamma1(C8,J(15,3))", Rational(4, 13), g1.value);
    Gamma0Options go;
    go.timeout_seconds = s.timeout;
    GammaResult g0 = gamma0(c8, j, go);
    push_row(rows, "Gamma0(C8,J(15,3))", Rational(1, 3),
             g0.extent == Extent::kFinite ? g0.value : Rational(0));
  }
  push_row(rows, "C4|C7", Rational(2, 3), val(make_cycle(4), make_cycle(7)));
  if (big) {
    push_row(rows, "C5|J(10,3)", Rational(1, 4), val(make_cycle(5), make_johnson3(10)));
    push_row(rows, "C7|J(14,3)", Rational(1, 4), val(make_cycle(7), make_johnson3(14)));
  }
  Json out = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    out.push_back(Json{{"row", r.name}, {"expected", r.expected}, {"computed", r.computed},
                       {"match", r.ok}});
    std::cerr << (r.ok ? "ok   " : "FAIL ") << r.name << ": expected " << r.expected
              << ", computed " << r.computed << "\n";
    all = all && r.ok;
  }
  rep.inputs() = Json{{"big", big}};
  rep.result() = Json{{"rows", out}, {"all_match", all}};
  rep.method("table");
  if (!all) throw Mismatch{};
}

void cmd_cyclegrid(Report& rep, const Settings& s, int nmax, int mmax) {
  if (nmax < 3 || mmax < 3) throw UsageError("grid bounds must be at least 3");
  rep.inputs() = Json{{"nmax", nmax}, {"mmax", mmax}};
  auto opt = s.relfrac_options();
  Json cells = Json::array();
  Json bad = Json::array();
  for (int n = 3; n <= nmax; ++n) {
    for (int m = 3; m <= mmax; ++m) {
      Graph g = make_cycle(n), h = make_cycle(m);
      Rational closed = relfrac_cycles(n, m);
      Rational vt = relfrac_vertex_transitive(g, h, opt).value;
      Rational lp = relfrac_lp(g, h, opt).value;
      bool ok = closed == vt && vt == lp;
      cells.push_back(Json{{"n", n}, {"m", m}, {"closed", closed.str()}, {"vt", vt.str()},
                           {"lp", lp.str()}, {"match", ok}});
      if (!ok) {
        bad.push_back(Json::array({n, m}));
        std::cerr << "mismatch at (" << n << "," << m << "): closed " << closed << " vt " << vt
                  << " lp " << lp << "\n";
      }
    }
  }
  rep.method("closed+vt+lp");
  rep.result() = Json{{"cells", cells}, {"mismatches", bad}};
  std::cerr << cells.size() << " cells, " << bad.size() << " mismatches\n";
  if (!bad.empty()) throw Mismatch{};
}

void cmd_expand_check(Report& rep, const Settings& s, const std::string& ha,
                      const std::string& ga) {
  Graph h = load_graph_arg(ha), g = load_graph_arg(ga);
  rep.inputs() = Json{{"H", graph_input(ha, h)}, {"G", graph_input(ga, g)}};
  bool pre = expand_feasibility_prefilter(h, g);
  rep.result()["prefilter"] = pre;
  if (!pre) {
    rep.result()["member"] = false;
    rep.method("prefilter");
    std::cerr << "G is not in Expand(H): counting condition fails\n";
    return;
  }
  auto cert = in_expand_certificate(h, g, s.hom_options());
  rep.method("homomorphism search");
  rep.result()["member"] = cert.has_value();
  if (cert) {
    bool ok = replay_matches(h, g, *cert);
    rep.result()["replay_verified"] = ok;
    rep.result()["label_of"] = cert->label_of;
    rep.certificate("script", to_json(cert->script), s);
    std::cerr << "G is in Expand(H); script of " << cert->script.ops.size()
              << " ops, replay " << (ok ? "verified" : "FAILED") << "\n";
    if (!ok) throw Mismatch{};
  } else {
    std::cerr << "G is not in Expand(H) (exhaustive search)\n";
  }
}

void cmd_hom(Report& rep, const Settings& s, const std::string& ha, const std::string& ga,
             const std::vector<int>& cayley) {
  if (!cayley.empty()) {
    if (cayley.size() != 5) throw UsageError("--cayley takes n,m,k,l,s");
    rep.inputs() = Json{{"cayley", cayley}};
    Homomorphism h = cayley_homomorphism(cayley[0], cayley[1], cayley[2], cayley[3], cayley[4]);
    rep.method("explicit");
    rep.result() = Json{{"exists", true}, {"verified", true}, {"map", h.map}};
    std::cerr << "explicit map verified\n";
    return;
  }
  if (ha.empty() || ga.empty()) throw UsageError("hom needs H and G, or --cayley");
  Graph h = load_graph_arg(ha), g = load_graph_arg(ga);
  rep.inputs() = Json{{"source", graph_input(ha, h)}, {"target", graph_input(ga, g)}};
  HomSearchStats st;
  auto f = find_homomorphism(h, g, s.hom_options(), &st);
  rep.method("backtracking");
  rep.result()["exists"] = f.has_value();
  if (f) rep.result()["map"] = f->map;
  rep.stats() = Json{{"nodes", st.nodes}};
  std::cerr << (f ? "homomorphism found\n" : "no homomorphism (exhaustive)\n");
}

void cmd_gamma0(Report& rep, const Settings& s, const std::string& ga, const std::string& ha) {
  Graph g = load_graph_arg(ga), h = load_graph_arg(ha);
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"H", graph_input(ha, h)}};
  Gamma0Options o;
  o.timeout_seconds = s.timeout;
  GammaResult r = gamma0(g, h, o);
  rep.method("assignment search");
  if (r.extent == Extent::kInfinite) {
    rep.result()["value"] = "inf";
  } else {
    put_value(rep.result(), "value", r.value, s);
  }
  if (r.best_assignment) rep.certificate("assignment", to_json(*r.best_assignment), s);
  rep.stats() = Json{{"nodes", r.nodes}};
  std::cerr << "Gamma0 = " << (r.extent == Extent::kInfinite ? "inf" : r.value.str()) << "\n";
}

void cmd_alpha(Report& rep, const Settings& s, const std::string& ga) {
  Graph g = load_graph_arg(ga);
  rep.inputs() = Json{{"G", graph_input(ga, g)}};
  MisResult r = max_independent_set(g, s.mis_options());
  rep.method("branch and bound");
  rep.result() = Json{{"value", r.size()}, {"witness", r.witness.to_vector()}};
  rep.stats() = Json{{"nodes", r.stats.nodes}};
  std::cerr << "alpha = " << r.size() << "\n";
}

void cmd_alphafrac(Report& rep, const Settings& s, const std::string& ga, bool chromatic) {
  Graph g = load_graph_arg(ga);
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"chromatic", chromatic}};
  Rational v = chromatic ? fractional_chromatic(g) : fractional_independence(g);
  rep.method("clique lp");
  put_value(rep.result(), chromatic ? "chi_f" : "alpha_star", v, s);
  std::cerr << (chromatic ? "chi_f = " : "alpha* = ") << v << "\n";
}

void cmd_alphak(Report& rep, const Settings& s, const std::string& ga, int k) {
  Graph g = load_graph_arg(ga);
  if (k < 1) throw UsageError("k must be at least 1");
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"k", k}};
  GenIndOptions o;
  o.timeout_seconds = s.timeout;
  GenIndResult r = generalized_independence(g, k, o);
  rep.method("branch and bound");
  rep.result() = Json{{"value", r.value}, {"multiplicities", r.multiplicities}};
  rep.stats() = Json{{"nodes", r.nodes}};
  std::cerr << "alpha_" << k << " = " << r.value << "\n";
}

void cmd_witness(Report& rep, const Settings& s, const std::string& ga, const std::string& ha) {
  Graph g = load_graph_arg(ga), h = load_graph_arg(ha);
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"H", graph_input(ha, h)}};
  auto opt = s.relfrac_options();
  Rational v = relfrac::relfrac(g, h, MethodChoice::kAuto, false, opt).value;
  Graph w = maximizer_witness(g, h, opt);
  long a = max_independent_set(strong_product(g, w), s.mis_options()).size();
  long b = max_independent_set(strong_product(h, w), s.mis_options()).size();
  rep.method("replicated complement");
  put_value(rep.result(), "value", v, s);
  rep.result()["alpha_GW"] = a;
  rep.result()["alpha_HW"] = b;
  rep.result()["witness_vertices"] = w.n();
  rep.certificate("witness", graph_to_json(w), s);
  std::cerr << "W has " << w.n() << " vertices; ratio " << a << "/" << b << "\n";
  if (Rational(a, b) != v) throw Mismatch{};
}

void cmd_capacity(Report& rep, const Settings& s, const std::string& ga, int d) {
  Graph g = load_graph_arg(ga);
  rep.inputs() = Json{{"G", graph_input(ga, g)}, {"d", d}};
  CapacityBound c = capacity_lower_bound(g, d, s.relfrac_options());
  rep.method("branch and bound");
  rep.result() = Json{{"alpha", c.alpha}, {"root", c.root}};
  std::cerr << "alpha(G^" << d << ") = " << c.alpha << ", root " << c.root << "\n";
}

// Cross-checks on random small graphs. Every property compares two exact
// quantities; a violation is reported and makes the command exit 4.
void cmd_selftest(Report& rep, const Settings& s, int count, unsigned seed) {
  rep.inputs() = Json{{"count", count}, {"seed", seed}};
  auto opt = s.relfrac_options();
  std::mt19937_64 rng(seed);
  auto random_graph = [&](int lo, int hi) {
    int n = lo + static_cast<int>(rng() % (hi - lo + 1));
    Graph g(n);
    const unsigned p = 25 + static_cast<unsigned>(rng() % 50);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < p) g.add_edge(u, v);
    return g;
  };
  auto alpha = [&](const Graph& g) { return max_independent_set(g, s.mis_options()).size(); };
  std::map<std::string, int> passed;
  Json violations = Json::array();
  auto check = [&](bool ok, const std::string& prop) {
    if (ok) ++passed[prop];
    else violations.push_back(prop);
  };
  for (int n = 3; n <= 8; ++n)
    for (int m = 3; m <= 8; ++m) {
      Graph g = make_cycle(n), h = make_cycle(m);
      Rational lp = relfrac_lp(g, h, opt).value;
      check(lp == relfrac_cycles(n, m) && lp == relfrac_vertex_transitive(g, h, opt).value,
            "cycle routes");
    }
  for (int t = 0; t < count; ++t) {
    Graph g = random_graph(1, 6), h = random_graph(1, 6);
    Rational v = relfrac_lp(g, h, opt).value;
    Rational back = relfrac_lp(h, g, opt).value;
    check(Rational(alpha(g), alpha(h)) <= v, "alpha ratio below value");
    check(fractional_independence(g) / fractional_independence(h) <= v,
          "alpha* ratio below value");
    check(v * back >= Rational(1), "reciprocal");
    GammaResult g1 = gamma1_certificate(g, h, opt);
    check(g1.value == v, "gamma1 equals value");
    Gamma0Options go;
    go.timeout_seconds = s.timeout;
    GammaResult g0 = gamma0(g, h, go);
    if (g0.extent == Extent::kFinite) check(g1.value <= g0.value, "gamma1 below gamma0");
    if (is_vertex_transitive(g)) {
      check(relfrac_vertex_transitive(g, h, opt).value == v, "transitive route");
    }
    Graph w = random_graph(1, 5);
    check(ratio_lower_bound(g, h, w, opt) <= v, "ratio through W below value");
    if (auto cert = in_expand_certificate(h, g, s.hom_options())) {
      check(replay_matches(h, g, *cert), "expand replay");
      check(v <= Rational(1), "expand implies value at most 1");
    }
  }
  Json counts = Json::object();
  int total = 0;
  for (const auto& [k, c] : passed) {
    counts[k] = c;
    total += c;
  }
  rep.method("property checks");
  rep.result() = Json{{"checks", total}, {"by_property", counts}, {"violations", violations}};
  std::cerr << total << " checks, " << violations.size() << " violations\n";
  if (!violations.empty()) throw Mismatch{};
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kTimeout:
      return kTimedOut;
    case ErrorKind::kInternalInconsistency:
    case ErrorKind::kNonconvergence:
      return kMismatch;
    case ErrorKind::kUndecided:
      return kUndecidedExit;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative fractional independence numbers and related graph invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  if (const char* env = std::getenv("RELFRAC_TIMEOUT")) {
    try {
      s.timeout = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring unparseable RELFRAC_TIMEOUT\n";
    }
  }
  app.add_option("--timeout", s.timeout, "seconds per exact solve (env RELFRAC_TIMEOUT)");
  app.add_option("--max-product-vertices", s.max_product, "size cap for product graphs");
  app.add_option("--threads", s.threads, "threads for independent-set search")
      ->check(CLI::PositiveNumber);
  app.add_flag("--approx", s.approx, "also print decimal approximations");
  app.add_flag("--no-timing", s.no_timing, "report elapsed_ms as 0");
  app.add_option("--cert-prefix", s.cert_prefix, "write certificates to <prefix>.<name>.json");

  std::string ga, ha, method = "auto", output;
  bool cross = false, want_witness = false, want_cert = false, big = false, chromatic = false;
  int nmax = 9, mmax = 9, k = 2, d = 2, count = 100;
  unsigned seed = 1;
  std::vector<std::string> make_args;
  std::vector<int> cayley;

  auto* make = app.add_subcommand("make", "build a graph: cycle:n, cayley:n:k, johnson3:n, "
                                          "complete:n, complement X, union X Y, sprod X Y, "
                                          "spower X d");
  make->add_option("spec", make_args)->required();
  make->add_option("-o,--output", output, "write the graph here");
  make->add_option("--format", s.format)->check(CLI::IsMember({"edges", "json"}));

  auto* rel = app.add_subcommand("relfrac", "alpha*(G|H)");
  rel->add_option("G", ga)->required();
  rel->add_option("H", ha)->required();
  rel->add_option("--method", method)->check(CLI::IsMember({"auto", "lp", "vt", "closed"}));
  rel->add_flag("--cross-check", cross);
  rel->add_flag("--witness", want_witness, "attach a maximizer graph W");
  rel->add_flag("--cert", want_cert, "attach the assignment distribution");

  auto* table = app.add_subcommand("table1", "reference pairs with known values");
  table->add_flag("--big", big, "include larger instances");

  auto* grid = app.add_subcommand("cyclegrid", "closed form vs transitive formula vs LP");
  grid->add_option("nmax", nmax);
  grid->add_option("mmax", mmax);

  auto* exp = app.add_subcommand("expand-check", "is G in Expand(H)?");
  exp->add_option("H", ha)->required();
  exp->add_option("G", ga)->required();

  auto* hom = app.add_subcommand("hom", "homomorphism H -> G");
  hom->add_option("H", ha);
  hom->add_option("G", ga);
  hom->add_option("--cayley", cayley, "explicit map for n,m,k,l,s")->delimiter(',');

  auto* g0 = app.add_subcommand("gamma0", "deterministic assignment bound");
  g0->add_option("G", ga)->required();
  g0->add_option("H", ha)->required();

  auto* al = app.add_subcommand("alpha", "independence number");
  al->add_option("G", ga)->required();

  auto* af = app.add_subcommand("alphafrac", "fractional independence number");
  af->add_option("G", ga)->required();
  af->add_flag("--chromatic", chromatic, "fractional chromatic number instead");

  auto* ak = app.add_subcommand("alphak", "generalized independence number");
  ak->add_option("G", ga)->required();
  ak->add_option("k", k)->required();

  auto* wit = app.add_subcommand("witness", "maximizer graph W for alpha*(G|H)");
  wit->add_option("G", ga)->required();
  wit->add_option("H", ha)->required();

  auto* cap = app.add_subcommand("capacity", "alpha of a strong power and its root");
  cap->add_option("G", ga)->required();
  cap->add_option("d", d)->required();

  auto* self = app.add_subcommand("selftest", "randomized cross-checks");
  self->add_option("--count", count);
  self->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    Json err{{"command", ""}, {"error", {{"kind", "usage"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep(sub->get_name());
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  int code = kOk;
  try {
    if (sub == make) cmd_make(rep, s, make_args, output);
    else if (sub == rel) cmd_relfrac(rep, s, ga, ha, method, cross, want_witness, want_cert);
    else if (sub == table) cmd_table1(rep, s, big);
    else if (sub == grid) cmd_cyclegrid(rep, s, nmax, mmax);
    else if (sub == exp) cmd_expand_check(rep, s, ha, ga);
    else if (sub == hom) cmd_hom(rep, s, ha, ga, cayley);
    else if (sub == g0) cmd_gamma0(rep, s, ga, ha);
    else if (sub == al) cmd_alpha(rep, s, ga);
    else if (sub == af) cmd_alphafrac(rep, s, ga, chromatic);
    else if (sub == ak) cmd_alphak(rep, s, ga, k);
    else if (sub == wit) cmd_witness(rep, s, ga, ha);
    else if (sub == cap) cmd_capacity(rep, s, ga, d);
    else if (sub == self) cmd_selftest(rep, s, count, seed);
  } catch (const Mismatch&) {
    rep.error("mismatch", "computed values disagree; see result");
    code = kMismatch;
  } catch (const UsageError& e) {
    rep.error("usage", e.what());
    code = kUsage;
  } catch (const TimeoutError& e) {
    rep.error(std::string(error_kind_name(e.kind())), e.what());
    rep.error_slot()["best_lower_bound"] = e.best_lower_bound().str();
    code = kTimedOut;
  } catch (const Error& e) {
    rep.error(std::string(error_kind_name(e.kind())), e.what());
    code = exit_for(e.kind());
  } catch (const std::exception& e) {
    rep.error("internal", e.what());
    code = kMismatch;
  }
  rep.finish(elapsed(), s.no_timing);
  return code;
}
