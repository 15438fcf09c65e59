// Graph input formats. Text: lines "u v" with 1-based vertices, optionally a
// line "base u v" choosing the base edge (default: edge {1,2} must exist).
// JSON: {"vertices": n, "edges": [[u,v],...], "base": [u,v]}.
#pragma once

#include <string>

#include <json.hpp>

#include "tropgenus/graph.hpp"

namespace tropgenus {

Graph parse_graph_text(const std::string& text);
Graph parse_graph_json(const nlohmann::json& doc);

// Sniffs the format: leading '{' means JSON.
Graph parse_graph(const std::string& content);
Graph parse_graph_file(const std::string& path);

nlohmann::ordered_json graph_to_json(const Graph& g);

}  // namespace tropgenus
