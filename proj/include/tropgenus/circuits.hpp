// Enumeration of all simple cycles (= circuits of the graphic matroid).
// Every cycle induces two tropical constraints, so completeness matters: a
// cycle basis only defines a prevariety.
#pragma once

#include <cstddef>

#include "tropgenus/graph.hpp"

namespace tropgenus {

struct Circuit {
  std::vector<int> edges;  // sorted edge indices
  bool contains_base = false;
};

// All simple cycles, each exactly once, sorted by length then by
// lexicographic edge-index set. Exponential in the worst case; the cap
// aborts with CircuitCapExceeded when exceeded.
std::vector<Circuit> enumerate_circuits(const Graph& g, size_t cap = 100000);

// Invariant check used by tests: the edge set induces a single simple cycle
// (every incident vertex has degree exactly 2 and the edges are connected)
// of length >= 3.
bool circuit_is_valid(const Graph& g, const Circuit& c);

}  // namespace tropgenus
