#include "tropgenus/circuits.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tropgenus/errors.hpp"

namespace tropgenus {

namespace {

struct CycleSearch {
  const Graph& g;
  const std::vector<std::vector<int>>& adj;
  size_t cap;
  std::vector<Circuit>* out;
  std::vector<int> path;
  std::vector<bool> on_path;

  void emit() {
    if (out->size() >= cap)
      fail(ErrorKind::CircuitCapExceeded,
           "more than " + std::to_string(cap) + " circuits");
    Circuit c;
    c.edges.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
      int u = path[i];
      int v = path[(i + 1) % path.size()];
      c.edges.push_back(*g.edge_index(u, v));
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.contains_base = c.edges.front() == 0;
    out->push_back(std::move(c));
  }

  // Grow simple paths from the anchor path[0]; every interior vertex is
  // larger than the anchor, so each cycle is found from its smallest vertex
  // only. Orientation is fixed by requiring path[1] < closing neighbour.
  void extend() {
    int x = path.back();
    for (int y : adj[x]) {
      if (y == path[0]) {
        if (path.size() >= 3 && path[1] < x) emit();
        continue;
      }
      if (y <= path[0] || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      extend();
      path.pop_back();
      on_path[y] = false;
    }
  }
};

}  // namespace

std::vector<Circuit> enumerate_circuits(const Graph& g, size_t cap) {
  std::vector<Circuit> result;
  auto adj = g.adjacency();
  CycleSearch search{g, adj, cap, &result, {}, std::vector<bool>(g.vertex_count, false)};
  for (int s = 0; s < g.vertex_count; ++s) {
    search.path = {s};
    search.on_path.assign(g.vertex_count, false);
    search.on_path[s] = true;
    search.extend();
  }
  std::sort(result.begin(), result.end(), [](const Circuit& a, const Circuit& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return result;
}

bool circuit_is_valid(const Graph& g, const Circuit& c) {
  if (c.edges.size() < 3) return false;
  std::map<int, int> degree;
  for (int e : c.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++degree[g.edges[e].first];
    ++degree[g.edges[e].second];
  }
  for (const auto& [vertex, d] : degree) {
    if (d != 2) return false;
  }
  // Degree-2 everywhere means a disjoint union of cycles; connectivity makes
  // it a single one.
  std::map<int, std::vector<int>> local;
  for (int e : c.edges) {
    local[g.edges[e].first].push_back(g.edges[e].second);
    local[g.edges[e].second].push_back(g.edges[e].first);
  }
  int start = degree.begin()->first;
  std::vector<int> stack = {start};
  std::map<int, bool> visited;
  visited[start] = true;
  size_t seen = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : local[x]) {
      if (!visited[y]) {
        visited[y] = true;
        ++seen;
        stack.push_back(y);
      }
    }
  }
  if (seen != degree.size()) return false;
  if (c.contains_base != (c.edges.front() == 0)) return false;
  return true;
}

}  // namespace tropgenus
