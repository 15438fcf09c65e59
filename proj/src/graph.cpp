#include "tropgenus/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tropgenus/errors.hpp"

namespace tropgenus {

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == u && edges[i].second == v) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::pair<int, int> base_edge) {
  if (vertex_count <= 0) fail(ErrorKind::InvalidInput, "vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v)
      fail(ErrorKind::InvalidInput,
           "loop edge at vertex " + std::to_string(u + 1));
    if (u < 0 || v >= vertex_count)
      fail(ErrorKind::InvalidInput, "edge endpoint out of range: " +
                                        std::to_string(u + 1) + "-" +
                                        std::to_string(v + 1));
    if (!seen.insert({u, v}).second)
      fail(ErrorKind::InvalidInput, "duplicate edge " + std::to_string(u + 1) +
                                        "-" + std::to_string(v + 1));
  }
  if (base_edge.first > base_edge.second)
    std::swap(base_edge.first, base_edge.second);
  auto it = std::find(edges.begin(), edges.end(), base_edge);
  if (it == edges.end())
    fail(ErrorKind::InvalidInput,
         "base edge " + std::to_string(base_edge.first + 1) + "-" +
             std::to_string(base_edge.second + 1) + " is not an edge");
  std::rotate(edges.begin(), it, it + 1);

  Graph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  return g;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count == 0) return true;
  auto adj = g.adjacency();
  std::vector<bool> visited(g.vertex_count, false);
  std::vector<int> stack = {0};
  visited[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!visited[y]) {
        visited[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.vertex_count;
}

std::vector<int> components_after_removal(const Graph& g, int u, int v) {
  auto adj = g.adjacency();
  std::vector<int> comp(g.vertex_count, -2);  // -2 = unvisited, -1 = removed
  comp[u] = -1;
  comp[v] = -1;
  int next_id = 0;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (comp[s] != -2) continue;
    std::vector<int> stack = {s};
    comp[s] = next_id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (comp[y] == -2) {
          comp[y] = next_id;
          stack.push_back(y);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::pair<int, int> new_base,
                       std::vector<int>* old_to_new) {
  std::vector<int> map(g.vertex_count, -1);
  for (size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges) {
    if (map[u] >= 0 && map[v] >= 0) edges.push_back({map[u], map[v]});
  }
  if (map[new_base.first] < 0 || map[new_base.second] < 0)
    fail(ErrorKind::InvalidInput, "base edge endpoints dropped from subgraph");
  Graph out = make_graph(static_cast<int>(keep.size()), std::move(edges),
                         {map[new_base.first], map[new_base.second]});
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

}  // namespace tropgenus
