#include "tropgenus/rigidity.hpp"

#include <string>

#include "tropgenus/errors.hpp"
#include "tropgenus/pebble.hpp"

namespace tropgenus {

OneDofWitness validate_one_dof(const Graph& g) {
  const int v = g.vertex_count;
  const int e = g.edge_count();
  if (2 * v - e != 4)
    fail(ErrorKind::WrongCount, "2|V|-|E| = " + std::to_string(2 * v - e) +
                                    ", expected 4");
  PebbleGame game(v);
  for (const auto& [a, b] : g.edges) {
    if (!game.try_insert(a, b))
      fail(ErrorKind::DependentEdges,
           "edge set is dependent in the rigidity matroid");
  }
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (g.has_edge(a, b)) continue;
      PebbleGame probe = game;
      if (probe.try_insert(a, b)) return OneDofWitness{{a, b}};
    }
  }
  fail(ErrorKind::NoRigidExtension,
       "no independent non-edge exists; the graph is not one removed edge "
       "away from minimally rigid");
}

bool is_rigid(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  return pebble_rank(g.edges, g.vertex_count) == 2 * g.vertex_count - 3;
}

bool is_redundantly_rigid(const Graph& g) {
  if (!is_rigid(g)) return false;
  for (size_t skip = 0; skip < g.edges.size(); ++skip) {
    std::vector<std::pair<int, int>> reduced;
    reduced.reserve(g.edges.size() - 1);
    for (size_t i = 0; i < g.edges.size(); ++i) {
      if (i != skip) reduced.push_back(g.edges[i]);
    }
    if (pebble_rank(reduced, g.vertex_count) != 2 * g.vertex_count - 3)
      return false;
  }
  return true;
}

bool is_3_connected(const Graph& g) {
  if (g.vertex_count < 4) return false;
  for (int u = 0; u < g.vertex_count; ++u) {
    for (int v = u + 1; v < g.vertex_count; ++v) {
      auto comp = components_after_removal(g, u, v);
      int max_id = -1;
      for (int id : comp) max_id = std::max(max_id, id);
      if (max_id > 0) return false;
    }
  }
  return true;
}

bool is_globally_rigid(const Graph& g) {
  if (g.vertex_count <= 3) {
    const int full = g.vertex_count * (g.vertex_count - 1) / 2;
    return g.edge_count() == full;
  }
  return is_3_connected(g) && is_redundantly_rigid(g);
}

std::vector<int> unique_rigidity_circuit(const Graph& g) {
  const int v = g.vertex_count;
  const int e = g.edge_count();
  if (e != 2 * v - 2 || !is_rigid(g))
    fail(ErrorKind::PreconditionViolation,
         "unique_rigidity_circuit needs a rigid graph with |E| = 2|V|-2");
  // Corank 1: the circuit is exactly the set of edges whose removal leaves
  // an independent set.
  std::vector<int> circuit;
  for (int skip = 0; skip < e; ++skip) {
    std::vector<std::pair<int, int>> reduced;
    reduced.reserve(e - 1);
    for (int i = 0; i < e; ++i) {
      if (i != skip) reduced.push_back(g.edges[i]);
    }
    if (pebble_rank(reduced, v) == e - 1) circuit.push_back(skip);
  }
  return circuit;
}

}  // namespace tropgenus
