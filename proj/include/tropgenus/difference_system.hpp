// Systems of exact difference constraints x_a - x_b <= c (optionally strict)
// over variables 1..n plus a distinguished constant node 0 that is fixed at
// zero. Every feasibility and point-finding query in the tropical engine
// reduces to these.
#pragma once

#include <cstddef>
#include <optional>

#include "tropgenus/rational.hpp"

namespace tropgenus {

// Edge weight in the constraint graph: an exact value minus `strict`
// infinitesimals. Strict inequalities are handled symbolically, never by a
// numeric epsilon.
struct LexWeight {
  Rational value;
  long strict = 0;

  LexWeight operator+(const LexWeight& other) const {
    return {value + other.value, strict + other.strict};
  }
  bool operator<(const LexWeight& other) const {
    if (value != other.value) return value < other.value;
    return strict > other.strict;  // more infinitesimals = smaller
  }
  bool negative() const { return value < 0 || (value == 0 && strict > 0); }
};

class DifferenceSystem {
 public:
  // Variables are 1..coordinate_count; node 0 is the constant.
  explicit DifferenceSystem(int coordinate_count);

  int coordinate_count() const { return coordinate_count_; }

  // x_a - x_b <= c, strict if requested.
  void add_upper(int a, int b, const Rational& c, bool strict = false);
  // x_a - x_b = c (two opposite non-strict inequalities).
  void add_equal(int a, int b, const Rational& c);

  size_t size() const { return constraints_.size(); }
  // Drop constraints back to an earlier size() mark (backtracking support).
  void truncate(size_t mark);

  // True iff the system has a rational solution: no negative cycle in the
  // constraint graph under the lexicographic (value, strictness) order.
  bool feasible() const;

  // A rational solution in the relative interior of the solution set: every
  // constraint that is not forced to equality holds with slack. Coordinates
  // are assigned one at a time to the midpoint of their implied interval, so
  // the result is deterministic. Throws Infeasible if feasible() is false.
  QVector interior_point() const;

 private:
  struct Constraint {
    int a, b;
    LexWeight w;
  };

  // Shortest-path distance from `source` to every node, or nullopt where
  // unreachable. Assumes no negative cycle.
  std::vector<std::optional<LexWeight>> shortest_from(
      int source, const std::vector<Constraint>& constraints) const;

  int coordinate_count_;
  std::vector<Constraint> constraints_;
};

}  // namespace tropgenus
