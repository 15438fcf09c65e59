// The tropical constraint system of a linkage graph. For every circuit C and
// a weight vector w, membership of a point u in the curve means both minima
//
//   min over e in C of  u_e        (side X)
//   min over e in C of  w_e - u_e  (side Y)
//
// are attained at least twice. The base edge contributes the constant slot
// u_0 = w_0 - u_0 = 0. Slot ids are edge indices; slot 0 is the constant.
#pragma once

#include <optional>

#include "tropgenus/circuits.hpp"
#include "tropgenus/graph.hpp"
#include "tropgenus/rational.hpp"

namespace tropgenus {

enum class Side { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

// Weight vectors live in the same QVector shape as curve points: entry e-1
// holds w_e for the non-base edge e; w_0 = 0 is implicit.
void validate_weights(const QVector& weights);

struct SlotValue {
  int slot;  // edge index; 0 is the constant slot
  Rational value;
  std::optional<Rational> slope;  // set only when evaluated along a direction
};

// Value of one slot: u_e on side X, w_e - u_e on side Y, 0 for slot 0.
Rational slot_value(int slot, const QVector& point, Side side,
                    const QVector& weights);

std::vector<SlotValue> slot_values(const QVector& point, const Circuit& c,
                                   Side side, const QVector& weights);

bool circuit_satisfied(const QVector& point, const Circuit& c, Side side,
                       const QVector& weights);

bool on_curve(const QVector& point, const std::vector<Circuit>& circuits,
              const QVector& weights);

// The face of X (or Y) whose relative interior contains the point: argmin
// ties become difference equalities, and the direction space of the affine
// span is spanned by indicator vectors of the free coordinate classes.
struct FaceSpan {
  QVector point;
  Side side;
  struct Equality {
    int a, b;    // u_a - u_b = c, with b possibly 0 (the constant node)
    Rational c;
  };
  std::vector<Equality> equalities;
  std::vector<QVector> basis;  // direction space of the affine span
};

FaceSpan face_span(const QVector& point, const std::vector<Circuit>& circuits,
                   Side side, const QVector& weights);

// True iff the direction spaces of the X-face and the Y-face at the point
// sum to the whole ambient space.
bool transversal_at(const QVector& point, const std::vector<Circuit>& circuits,
                    const QVector& weights);

// Per-point argmin tables, computed once and shared by the membership test,
// the direction search and the travel subroutine.
struct CircuitSideArgmin {
  Rational min_value;
  std::vector<int> argmin;  // slot ids attaining the minimum
};

struct PointAnalysis {
  bool on_curve = false;
  // table[side][circuit index]
  std::vector<CircuitSideArgmin> table[2];
};

PointAnalysis analyze_point(const QVector& point,
                            const std::vector<Circuit>& circuits,
                            const QVector& weights);

// Coordinate classes merged by the argmin ties of one side (or of both
// sides combined). A class containing the constant slot is frozen.
struct TieClasses {
  std::vector<std::vector<int>> free_classes;  // sorted edge indices
  std::vector<int> frozen;                     // sorted edge indices
};

TieClasses tie_classes(const PointAnalysis& analysis,
                       const std::vector<Circuit>& circuits, int n,
                       std::optional<Side> side_filter);

}  // namespace tropgenus
