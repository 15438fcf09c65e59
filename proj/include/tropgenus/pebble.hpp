// The (2,3)-pebble game: incremental independence testing and rank in the
// generic planar rigidity matroid (equivalently the (2,3)-sparsity matroid).
#pragma once

#include <utility>
#include <vector>

namespace tropgenus {

class PebbleGame {
 public:
  explicit PebbleGame(int vertex_count);

  // Attempts to add edge {u,v}; returns true iff the edge is independent of
  // the accepted set, in which case it is inserted.
  bool try_insert(int u, int v);

  int accepted_count() const { return accepted_; }

 private:
  // Move one free pebble onto `target` by reversing a directed path, without
  // taking a pebble from `other`. Returns false if none is reachable.
  bool gather_to(int target, int other);

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  int accepted_ = 0;
};

// Rank of an edge set in the generic 2D rigidity matroid. The set is
// independent iff the rank equals its size. Throws InvalidInput on loops or
// out-of-range endpoints; duplicate edges are legal input (the second copy
// is always dependent).
int pebble_rank(const std::vector<std::pair<int, int>>& edges,
                int vertex_count);

}  // namespace tropgenus
