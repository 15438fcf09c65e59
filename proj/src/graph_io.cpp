#include "tropgenus/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "tropgenus/errors.hpp"

namespace tropgenus {

namespace {

std::pair<int, int> to_internal(int u, int v, const std::string& where) {
  if (u < 1 || v < 1)
    fail(ErrorKind::InvalidInput, "vertices are 1-based (" + where + ")");
  return {u - 1, v - 1};
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int max_vertex = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::pair<int, int>> base;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    const std::string where = "line " + std::to_string(line_no);

    int u, v;
    if (first == "base") {
      if (!(fields >> u >> v))
        fail(ErrorKind::InvalidInput, "malformed base line (" + where + ")");
      if (base) fail(ErrorKind::InvalidInput, "duplicate base line (" + where + ")");
      base = to_internal(u, v, where);
    } else {
      try {
        u = std::stoi(first);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidInput, "expected a vertex number (" + where + ")");
      }
      if (!(fields >> v))
        fail(ErrorKind::InvalidInput, "edge line needs two vertices (" + where + ")");
      edges.push_back(to_internal(u, v, where));
    }
    std::string extra;
    if (fields >> extra)
      fail(ErrorKind::InvalidInput, "trailing text '" + extra + "' (" + where + ")");
    max_vertex = std::max({max_vertex, u, v});
  }

  if (edges.empty()) fail(ErrorKind::InvalidInput, "no edges in input");
  if (!base) base = std::pair<int, int>{0, 1};
  return make_graph(max_vertex, std::move(edges), *base);
}

Graph parse_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    fail(ErrorKind::InvalidInput,
         "graph JSON needs 'vertices' and 'edges' fields");
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::pair<int, int> base{0, 1};
  try {
    n = doc.at("vertices").get<int>();
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        fail(ErrorKind::InvalidInput, "each edge must be a pair [u, v]");
      edges.push_back(to_internal(e[0].get<int>(), e[1].get<int>(), "edges"));
    }
    if (doc.contains("base")) {
      const auto& b = doc.at("base");
      if (!b.is_array() || b.size() != 2)
        fail(ErrorKind::InvalidInput, "'base' must be a pair [u, v]");
      base = to_internal(b[0].get<int>(), b[1].get<int>(), "base");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("graph JSON: ") + e.what());
  }
  return make_graph(n, std::move(edges), base);
}

Graph parse_graph(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(content);
      } catch (const std::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
      }
      return parse_graph_json(doc);
    }
    break;
  }
  return parse_graph_text(content);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_count;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u + 1, v + 1});
  doc["edges"] = std::move(edges);
  doc["base"] = {g.edges[0].first + 1, g.edges[0].second + 1};
  return doc;
}

}  // namespace tropgenus
