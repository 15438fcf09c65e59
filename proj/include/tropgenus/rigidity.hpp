// Rigidity predicates built on the pebble game: 1-dof validation, global
// rigidity, and the unique-circuit extraction used by trace simplification.
#pragma once

#include "tropgenus/graph.hpp"

namespace tropgenus {

struct OneDofWitness {
  // A non-edge whose addition yields a minimally rigid graph.
  std::pair<int, int> witness_edge;
};

// Succeeds iff |E| = 2|V|-4, the edge set is independent, and some non-edge
// extends it to a minimally rigid graph. Throws WrongCount, DependentEdges
// or NoRigidExtension otherwise.
OneDofWitness validate_one_dof(const Graph& g);

bool is_rigid(const Graph& g);
bool is_redundantly_rigid(const Graph& g);
// At least four vertices and no separation pair.
bool is_3_connected(const Graph& g);
// Jackson-Jordan for |V| >= 4; complete graphs for |V| <= 3.
bool is_globally_rigid(const Graph& g);

// The unique matroid circuit of a rigid graph with |E| = 2|V|-2 (corank 1),
// as sorted edge indices. Throws PreconditionViolation if the corank is not
// exactly 1.
std::vector<int> unique_rigidity_circuit(const Graph& g);

}  // namespace tropgenus
