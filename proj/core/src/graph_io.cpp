#include "relfrac/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relfrac/error.hpp"

namespace relfrac {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<int> to_int(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Attaches the tag if the edges match the rebuilt family.
Graph attach_family(const Graph& g, const std::string& spec, int line) {
  auto fam = family_from_spec(spec);
  if (!fam) throw ParseError(line, "unknown family '" + spec + "'");
  Graph rebuilt;
  try {
    rebuilt = realize_family(*fam);
  } catch (const Error& e) {
    throw ParseError(line, std::string("bad family: ") + e.what());
  }
  if (!(rebuilt == g)) {
    throw ParseError(line, "family '" + spec + "' does not match the edges");
  }
  return g.with_family(*fam);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;
  std::string family_spec;
  int family_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string content = raw;
    auto hash = content.find('#');
    if (hash != std::string::npos) {
      std::string comment = trim(content.substr(hash + 1));
      if (comment.rfind("family:", 0) == 0) {
        family_spec = trim(comment.substr(7));
        family_line = line_no;
      }
      content = content.substr(0, hash);
    }
    std::istringstream fields(content);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 1) throw ParseError(line_no, "expected vertex count");
      n = to_int(tok[0]);
      if (!n) throw ParseError(line_no, "bad vertex count '" + tok[0] + "'");
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v'");
    auto u = to_int(tok[0]);
    auto v = to_int(tok[1]);
    if (!u || !v) throw ParseError(line_no, "bad vertex id");
    if (*u >= *n || *v >= *n) throw ParseError(line_no, "vertex id out of range");
    if (*u == *v) throw ParseError(line_no, "self-loop");
    edges.emplace_back(*u, *v);
  }
  if (!n) throw ParseError(line_no + 1, "missing vertex count");
  Graph g = Graph::from_edges(*n, edges);
  if (!family_spec.empty()) g = attach_family(g, family_spec, family_line);
  return g;
}

int line_of_offset(std::string_view text, size_t offset) {
  int line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

Graph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError(1, "expected an object with integer field 'n'");
  }
  int n = doc["n"].get<int>();
  if (n < 0) throw ParseError(1, "negative vertex count");
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    const auto& arr = doc["edges"];
    if (!arr.is_array()) throw ParseError(1, "'edges' must be an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError(1, "edge " + std::to_string(i) + " is not [u, v]");
      }
      int u = e[0].get<int>();
      int v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(1, "edge " + std::to_string(i) + " out of range");
      }
      if (u == v) throw ParseError(1, "edge " + std::to_string(i) + " is a self-loop");
      edges.emplace_back(u, v);
    }
  }
  Graph g = Graph::from_edges(n, edges);
  if (doc.contains("family") && doc["family"].is_string()) {
    std::string spec = doc["family"].get<std::string>();
    if (family_from_spec(spec)) g = attach_family(g, spec, 1);
  }
  return g;
}

}  // namespace

std::optional<Family> family_from_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() < 2) return std::nullopt;
  std::vector<int> args;
  for (size_t i = 1; i < parts.size(); ++i) {
    auto v = to_int(parts[i]);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  const std::string& kind = parts[0];
  if (kind == "cycle" && args.size() == 1) return Family::cycle(args[0]);
  if (kind == "cayley" && args.size() == 2) return Family::cayley(args[0], args[1]);
  if (kind == "johnson3" && args.size() == 1) return Family::johnson3(args[0]);
  if (kind == "complete" && args.size() == 1) return Family::complete(args[0]);
  return std::nullopt;
}

std::optional<Graph> graph_from_spec(const std::string& spec) {
  if (auto fam = family_from_spec(spec)) return realize_family(*fam);
  auto parts = split(spec, ':');
  if (parts.size() == 2) {
    auto v = to_int(parts[1]);
    if (!v) return std::nullopt;
    if (parts[0] == "edgeless") return make_edgeless(*v);
    if (parts[0] == "path") return make_path(*v);
  }
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kJson ? parse_json_graph(text)
                                      : parse_edge_list(text);
}

Graph parse_graph(std::string_view text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  bool is_json = b != std::string_view::npos && text[b] == '{';
  return parse_graph(text, is_json ? GraphFormat::kJson : GraphFormat::kEdgeList);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  const bool tagged = g.family() && g.family()->is_constructor();
  if (format == GraphFormat::kJson) {
    json doc;
    doc["n"] = g.n();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (g.family()) doc["family"] = g.family()->str();
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  if (tagged) out << "# family: " << g.family()->str() << "\n";
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << serialize_graph(g, format);
}

}  // namespace relfrac
