#include "tropgenus/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropgenus/errors.hpp"
#include "tropgenus/linalg.hpp"

namespace tropgenus {

void validate_weights(const QVector& weights) {
  std::set<Rational> seen;
  for (const Rational& w : weights) {
    if (w <= 0)
      fail(ErrorKind::InvalidWeights, "weights must be positive");
    if (!seen.insert(w).second)
      fail(ErrorKind::InvalidWeights, "weights must be pairwise distinct");
  }
}

Rational slot_value(int slot, const QVector& point, Side side,
                    const QVector& weights) {
  if (slot == 0) return Rational(0);
  if (side == Side::X) return point[slot - 1];
  return weights[slot - 1] - point[slot - 1];
}

std::vector<SlotValue> slot_values(const QVector& point, const Circuit& c,
                                   Side side, const QVector& weights) {
  std::vector<SlotValue> out;
  out.reserve(c.edges.size());
  for (int e : c.edges) {
    out.push_back({e, slot_value(e, point, side, weights), std::nullopt});
  }
  return out;
}

bool circuit_satisfied(const QVector& point, const Circuit& c, Side side,
                       const QVector& weights) {
  int hits = 0;
  std::optional<Rational> best;
  for (int e : c.edges) {
    Rational v = slot_value(e, point, side, weights);
    if (!best || v < *best) {
      best = v;
      hits = 1;
    } else if (v == *best) {
      ++hits;
    }
  }
  return hits >= 2;
}

bool on_curve(const QVector& point, const std::vector<Circuit>& circuits,
              const QVector& weights) {
  for (const Circuit& c : circuits) {
    if (!circuit_satisfied(point, c, Side::X, weights)) return false;
    if (!circuit_satisfied(point, c, Side::Y, weights)) return false;
  }
  return true;
}

PointAnalysis analyze_point(const QVector& point,
                            const std::vector<Circuit>& circuits,
                            const QVector& weights) {
  PointAnalysis analysis;
  analysis.on_curve = true;
  for (int s = 0; s < 2; ++s) {
    Side side = s == 0 ? Side::X : Side::Y;
    auto& table = analysis.table[s];
    table.reserve(circuits.size());
    for (const Circuit& c : circuits) {
      CircuitSideArgmin row;
      for (int e : c.edges) {
        Rational v = slot_value(e, point, side, weights);
        if (row.argmin.empty() || v < row.min_value) {
          row.min_value = v;
          row.argmin.assign(1, e);
        } else if (v == row.min_value) {
          row.argmin.push_back(e);
        }
      }
      if (row.argmin.size() < 2) analysis.on_curve = false;
      table.push_back(std::move(row));
    }
  }
  return analysis;
}

namespace {

// Union-find over coordinates 1..n plus the constant node 0.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller id (and node 0) as root
    parent[b] = a;
  }
};

}  // namespace

TieClasses tie_classes(const PointAnalysis& analysis,
                       const std::vector<Circuit>& circuits, int n,
                       std::optional<Side> side_filter) {
  UnionFind uf(n);
  for (int s = 0; s < 2; ++s) {
    if (side_filter && (s == 0 ? Side::X : Side::Y) != *side_filter) continue;
    for (size_t ci = 0; ci < circuits.size(); ++ci) {
      const auto& argmin = analysis.table[s][ci].argmin;
      for (size_t i = 1; i < argmin.size(); ++i) uf.unite(argmin[0], argmin[i]);
    }
  }
  TieClasses out;
  std::vector<std::vector<int>> by_root(n + 1);
  for (int e = 1; e <= n; ++e) by_root[uf.find(e)].push_back(e);
  out.frozen = by_root[0];  // classes merged with the constant node
  for (int root = 1; root <= n; ++root) {
    if (!by_root[root].empty()) out.free_classes.push_back(by_root[root]);
  }
  return out;
}

FaceSpan face_span(const QVector& point, const std::vector<Circuit>& circuits,
                   Side side, const QVector& weights) {
  const int n = static_cast<int>(point.size());
  PointAnalysis analysis = analyze_point(point, circuits, weights);
  const auto& table = analysis.table[side == Side::X ? 0 : 1];
  for (size_t ci = 0; ci < circuits.size(); ++ci) {
    if (table[ci].argmin.size() < 2)
      fail(ErrorKind::PreconditionViolation,
           "point does not satisfy the side constraints");
  }

  FaceSpan span;
  span.point = point;
  span.side = side;
  for (size_t ci = 0; ci < circuits.size(); ++ci) {
    const auto& argmin = table[ci].argmin;
    int rep = argmin[0];
    for (size_t i = 1; i < argmin.size(); ++i) {
      int a = argmin[i];
      // Tie between slots rep and a, written as a difference constraint on
      // the coordinates. On side Y the tie w_a - u_a = w_rep - u_rep turns
      // into u_a - u_rep = w_a - w_rep.
      if (side == Side::X) {
        if (rep == 0)
          span.equalities.push_back({a, 0, Rational(0)});
        else
          span.equalities.push_back({a, rep, Rational(0)});
      } else {
        if (rep == 0)
          span.equalities.push_back({a, 0, weights[a - 1]});
        else
          span.equalities.push_back({a, rep, weights[a - 1] - weights[rep - 1]});
      }
    }
  }

  TieClasses classes = tie_classes(analysis, circuits, n,
                                   side);
  for (const auto& cls : classes.free_classes) {
    QVector indicator(n, Rational(0));
    for (int e : cls) indicator[e - 1] = 1;
    span.basis.push_back(std::move(indicator));
  }
  return span;
}

bool transversal_at(const QVector& point, const std::vector<Circuit>& circuits,
                    const QVector& weights) {
  const int n = static_cast<int>(point.size());
  if (!on_curve(point, circuits, weights))
    fail(ErrorKind::PreconditionViolation, "transversal_at off the curve");
  FaceSpan x = face_span(point, circuits, Side::X, weights);
  FaceSpan y = face_span(point, circuits, Side::Y, weights);
  return sum_of_spans_is_full(x.basis, y.basis, n);
}

}  // namespace tropgenus
