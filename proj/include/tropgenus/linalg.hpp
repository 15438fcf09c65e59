// Exact linear algebra over the rationals: rank and span tests.
#pragma once

#include "tropgenus/rational.hpp"

namespace tropgenus {

// Rank of the row set via exact Gaussian elimination. All rows must share
// one length; throws DimensionMismatch otherwise.
int rank(std::vector<QVector> rows);

// True iff span(basis_a) + span(basis_b) = R^n, i.e. the stacked rows have
// rank n.
bool sum_of_spans_is_full(const std::vector<QVector>& basis_a,
                          const std::vector<QVector>& basis_b, int n);

}  // namespace tropgenus
