// Start-point search: draw random integer weights, then find one point of
// the curve by depth-first branching over per-circuit argmin supports with
// difference-constraint propagation.
#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tropgenus/circuits.hpp"
#include "tropgenus/graph.hpp"
#include "tropgenus/tropical.hpp"

namespace tropgenus {

enum class CircuitOrder {
  // Fundamental cycles of a BFS spanning tree first (they constrain most
  // coordinates early), remaining circuits by increasing length.
  FundamentalFirst,
  // Plain shortest-first, the enumeration order.
  ShortestFirst,
};

struct SeedConfig {
  uint64_t rng_seed = 0;
  int weight_bits = 24;      // weights drawn from [1, 2^weight_bits]
  int max_restarts = 8;
  uint64_t node_budget = 1'000'000;  // search nodes before giving up
  CircuitOrder circuit_order = CircuitOrder::FundamentalFirst;
};

// n distinct positive integers, uniform over [1, 2^weight_bits] and
// deterministic for a fixed rng_seed.
QVector random_weights(const SeedConfig& cfg, int n);

struct StartPoint {
  QVector point;
  int face_dimension = 0;  // 0 = vertex of the curve, 1 = edge interior
  // Chosen argmin pair per (circuit, side) level, in search order.
  std::vector<std::array<int, 2>> support_choice;
  uint64_t nodes_explored = 0;
};

// Depth-first search over circuits (both sides), branching on an unordered
// pair of slots asserted tied-and-minimal; each branch adds difference
// constraints and prunes on infeasibility. A full feasible assignment yields
// the interior point of its face, verified by on_curve and transversal_at
// and by face dimension <= 1. Returns nullopt when the search space or the
// node budget is spent (the pipeline restarts with fresh weights).
std::optional<StartPoint> find_start(const Graph& g,
                                     const std::vector<Circuit>& circuits,
                                     const QVector& weights,
                                     const SeedConfig& cfg);

// Deterministic per-restart seed derivation.
uint64_t derive_seed(uint64_t base, uint64_t attempt);

}  // namespace tropgenus
