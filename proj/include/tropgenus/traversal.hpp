// Curve traversal: feasible directions at a point, travel along an edge to
// the next vertex, breadth-first exploration of the connected tropical
// curve, and the genus count.
#pragma once

#include <cstdint>

#include "tropgenus/seed.hpp"
#include "tropgenus/tropical.hpp"

namespace tropgenus {

// Entries in {-1,0,+1}, constant on blocks, all nonzero entries sharing one
// sign; indexed like curve points (entry e-1 for edge e).
using Direction = std::vector<int>;

struct BlockPartition {
  std::vector<std::vector<int>> free_blocks;  // sorted edge indices
  std::vector<int> frozen;                    // coordinates tied to a constant
};

// Pairs from circuits whose minimum is attained exactly twice, closed
// transitively; a pair with the constant slot freezes the other coordinate.
BlockPartition blocks_at(const QVector& v, const std::vector<Circuit>& circuits,
                         const QVector& weights);

// All directions d = +/- indicator of a nonempty set of free blocks such
// that, for every circuit and side, the lexicographic (value, slope) minimum
// over the slots is attained at least twice. Throws BlockCapExceeded when
// the free block count exceeds the cap.
std::vector<Direction> candidate_directions(const QVector& v,
                                            const std::vector<Circuit>& circuits,
                                            const QVector& weights,
                                            int block_cap = 25);

struct TravelOutcome {
  bool bounded = false;
  QVector next;   // valid when bounded
  Rational step;  // positive; next = origin + step * direction
};

// Moves from v in direction d until some slot overtakes a moving minimum
// (the next vertex), or forever (an unbounded ray).
TravelOutcome travel(const QVector& v, const Direction& d,
                     const std::vector<Circuit>& circuits,
                     const QVector& weights);

struct TropicalCurve {
  std::vector<QVector> vertices;
  struct Edge {
    int a, b;             // endpoint ids; direction is oriented a -> b
    Direction direction;  // primitive
    Rational length;
  };
  std::vector<Edge> bounded_edges;
  struct Ray {
    int vertex;
    Direction direction;
  };
  std::vector<Ray> rays;
};

struct TraversalConfig {
  size_t vertex_budget = 1'000'000;
  int block_cap = 25;
  int threads = 1;  // >1 processes each frontier wave in parallel
};

struct TraversalStats {
  size_t transversality_checks = 0;
};

// Breadth-first exploration from the start point. Every newly discovered
// vertex must pass the transversality and trivalence checks, otherwise the
// traversal aborts (NonTransversalVertex / NonTrivalentVertex) and the
// pipeline restarts with fresh weights. An edge-interior start (exactly two
// antipodal directions) is removed afterwards and its half-edges merged.
TropicalCurve traverse(const StartPoint& start,
                       const std::vector<Circuit>& circuits,
                       const QVector& weights,
                       const TraversalConfig& cfg = {},
                       TraversalStats* stats = nullptr);

// Bounded edges minus vertices plus one (the curve is connected).
int genus(const TropicalCurve& curve);

struct PipelineConfig {
  uint64_t rng_seed = 0;
  int weight_bits = 24;
  int max_restarts = 8;
  uint64_t node_budget = 1'000'000;
  size_t vertex_budget = 1'000'000;
  int block_cap = 25;
  size_t circuit_cap = 100000;
  int threads = 1;
};

struct GenusReport {
  int genus = 0;
  size_t vertex_count = 0;
  size_t bounded_edge_count = 0;
  size_t ray_count = 0;
  QVector weights;
  int restarts = 0;
  size_t transversality_checks = 0;
  uint64_t search_nodes = 0;
  TropicalCurve curve;
};

// Full pipeline: validate, enumerate circuits, seed loop with restarts,
// traverse, count. Throws RestartsExhausted (with the per-attempt failure
// history in the message) when no attempt succeeds.
GenusReport compute_genus(const Graph& g, const PipelineConfig& cfg = {});

}  // namespace tropgenus
