#include "tropgenus/linalg.hpp"

#include "tropgenus/errors.hpp"

namespace tropgenus {

int rank(std::vector<QVector> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  for (const QVector& row : rows) {
    if (row.size() != cols)
      fail(ErrorKind::DimensionMismatch, "rank: ragged matrix");
  }

  int r = 0;
  for (size_t col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[r][col];
      for (size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool sum_of_spans_is_full(const std::vector<QVector>& basis_a,
                          const std::vector<QVector>& basis_b, int n) {
  std::vector<QVector> stacked;
  stacked.reserve(basis_a.size() + basis_b.size());
  for (const QVector& v : basis_a) {
    if (static_cast<int>(v.size()) != n)
      fail(ErrorKind::DimensionMismatch, "span vector of wrong dimension");
    stacked.push_back(v);
  }
  for (const QVector& v : basis_b) {
    if (static_cast<int>(v.size()) != n)
      fail(ErrorKind::DimensionMismatch, "span vector of wrong dimension");
    stacked.push_back(v);
  }
  return rank(std::move(stacked)) == n;
}

}  // namespace tropgenus
