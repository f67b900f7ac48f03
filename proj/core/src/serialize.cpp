#include "relfrac/serialize.hpp"

#include "relfrac/error.hpp"

namespace relfrac {

Json to_json(const Rational& r) {
  return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"display", r.str()}};
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    return Rational(mpz_class(j.at("num").get<std::string>()),
                    mpz_class(j.at("den").get<std::string>()));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("bad rational: ") + e.what());
  }
}

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const AssignmentF& f) {
  Json out = Json::array();
  for (const auto& s : f.sets) out.push_back(to_json(s));
  return out;
}

AssignmentF assignment_from_json(const Json& j, int universe) {
  AssignmentF f;
  try {
    for (const auto& row : j) {
      VertexSet s(universe);
      for (const auto& v : row) {
        const int x = v.get<int>();
        if (x < 0 || x >= universe) throw ParseError(0, "assignment vertex out of range");
        s.insert(x);
      }
      f.sets.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad assignment: ") + e.what());
  }
  return f;
}

Json to_json(const std::vector<DualTerm>& dist) {
  Json out = Json::array();
  for (const auto& t : dist) {
    out.push_back(Json{{"beta", to_json(t.beta)}, {"f", to_json(t.f)}});
  }
  return out;
}

Json to_json(const RelFracResult& r) {
  Json out{{"value", to_json(r.value)}, {"method", method_name(r.method)}};
  Json w = Json::array();
  for (const auto& x : r.weights) w.push_back(to_json(x));
  out["weights"] = w;
  if (!r.dual_cert.empty()) out["dual_certificate"] = to_json(r.dual_cert);
  if (r.cross_check_method) {
    out["cross_check"] = Json{{"method", method_name(*r.cross_check_method)},
                              {"value", to_json(*r.cross_check_value)}};
  }
  out["stats"] = Json{{"lp_iterations", r.lp_iterations}, {"mis_nodes", r.mis_nodes}};
  return out;
}

Json to_json(const GammaResult& r) {
  Json out{{"kind", r.kind == GammaKind::kGamma0 ? "gamma0" : "gamma1"}};
  if (r.extent == Extent::kInfinite) {
    out["value"] = "inf";
  } else {
    out["value"] = to_json(r.value);
  }
  if (r.best_assignment) out["assignment"] = to_json(*r.best_assignment);
  if (!r.distribution.empty()) out["distribution"] = to_json(r.distribution);
  out["nodes"] = r.nodes;
  return out;
}

Json to_json(const Homomorphism& h) { return Json{{"map", h.map}}; }

Json to_json(const ExpandOp& op) {
  switch (op.kind) {
    case ExpandOp::Kind::kRemove:
      return Json{{"op", "remove"}, {"v", op.v}};
    case ExpandOp::Kind::kClique:
      return Json{{"op", "clique"}, {"v", op.v}, {"size", op.size}};
    case ExpandOp::Kind::kEdge:
      return Json{{"op", "edge"}, {"u", op.u}, {"w", op.w}};
  }
  return {};
}

Json to_json(const ExpandScript& s) {
  Json ops = Json::array();
  for (const auto& op : s.ops) ops.push_back(to_json(op));
  return Json{{"normal_form", s.normal_form}, {"ops", ops}};
}

ExpandScript expand_script_from_json(const Json& j) {
  ExpandScript s;
  try {
    s.normal_form = j.value("normal_form", false);
    int i = 0;
    for (const auto& o : j.at("ops")) {
      const std::string kind = o.at("op").get<std::string>();
      if (kind == "remove") {
        s.ops.push_back(ExpandOp::remove(o.at("v").get<int>()));
      } else if (kind == "clique") {
        s.ops.push_back(ExpandOp::clique(o.at("v").get<int>(), o.at("size").get<int>()));
      } else if (kind == "edge") {
        s.ops.push_back(ExpandOp::edge(o.at("u").get<int>(), o.at("w").get<int>()));
      } else {
        throw ParseError(0, "op " + std::to_string(i) + ": unknown kind '" + kind + "'");
      }
      ++i;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad script: ") + e.what());
  }
  return s;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  Json out{{"n", g.n()}, {"edges", edges}};
  if (g.family()) out["family"] = g.family()->str();
  return out;
}

}  // namespace relfrac
