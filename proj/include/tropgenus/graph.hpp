// Linkage graphs: undirected simple graphs with a distinguished base edge.
// Vertices are 0-based internally (the CLI layer speaks 1-based). The base
// edge always sits at index 0, and tropical coordinates are indexed by the
// remaining edges 1..n with n = |edges|-1.
#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace tropgenus {

struct Graph {
  int vertex_count = 0;
  // Each pair normalised to u < v; pairwise distinct; edges[0] is the base.
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int coordinate_count() const { return edge_count() - 1; }

  std::optional<int> edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

  // vertex -> sorted neighbour list
  std::vector<std::vector<int>> adjacency() const;
};

// Validates and canonicalises: rejects loops, duplicate edges, out-of-range
// endpoints, and a base edge that is not present. The base edge is moved to
// index 0; the relative order of the other edges is preserved.
Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::pair<int, int> base_edge);

bool is_connected(const Graph& g);

// Connectivity of the graph with two vertices deleted (used by the
// 3-connectivity test and the separation-pair search). Returns the component
// id of every remaining vertex, -1 for the removed ones; component ids are
// 0..k-1 in order of smallest member.
std::vector<int> components_after_removal(const Graph& g, int u, int v);

// Graph on the vertex subset `keep` (ascending), relabelled to 0..k-1 with
// the induced edges. `old_to_new` (optional) receives the vertex map, -1 for
// dropped vertices.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::pair<int, int> new_base,
                       std::vector<int>* old_to_new = nullptr);

}  // namespace tropgenus
