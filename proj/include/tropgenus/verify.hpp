// Structural checks on traversed curves, shared by the test suites: local
// trivalence, balancing, primitive two-valued edge directions, membership of
// edge midpoints, and reverse-travel symmetry.
#pragma once

#include <string>

#include "tropgenus/traversal.hpp"

namespace tropgenus {

// Returns an empty string when every invariant holds, otherwise the first
// violation. `sample_reverse` bounds how many edges get the reverse-travel
// check (0 = all).
std::string curve_inconsistency(const TropicalCurve& curve,
                                const std::vector<Circuit>& circuits,
                                const QVector& weights,
                                size_t sample_reverse = 0,
                                bool check_trivalence = true);

// True iff the curve's vertex/edge adjacency forms one connected graph.
bool curve_connected(const TropicalCurve& curve);

}  // namespace tropgenus
