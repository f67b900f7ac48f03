#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "relfrac/graph.hpp"

namespace relfrac {

enum class GraphFormat { kEdgeList, kJson };

// Edge list: first data line is the vertex count, then one "u v" pair per
// line. '#' starts a comment. A "# family: <spec>" comment restores the
// provenance tag after checking it against the edges.
Graph parse_graph(std::string_view text, GraphFormat format);
// Picks JSON when the first non-space character is '{'.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path, GraphFormat format);

// "cycle:n", "cayley:n:k", "johnson3:n", "complete:n", "edgeless:n",
// "path:n". Returns nullopt for anything else.
std::optional<Graph> graph_from_spec(const std::string& spec);
std::optional<Family> family_from_spec(const std::string& spec);

}  // namespace relfrac
