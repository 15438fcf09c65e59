#include "tropgenus/difference_system.hpp"

#include <cassert>

#include "tropgenus/errors.hpp"

namespace tropgenus {

DifferenceSystem::DifferenceSystem(int coordinate_count)
    : coordinate_count_(coordinate_count) {
  if (coordinate_count < 0)
    fail(ErrorKind::InvalidInput, "negative coordinate count");
}

void DifferenceSystem::add_upper(int a, int b, const Rational& c, bool strict) {
  const int n = coordinate_count_;
  if (a < 0 || a > n || b < 0 || b > n || a == b)
    fail(ErrorKind::InvalidInput, "constraint node out of range");
  // x_a - x_b <= c  becomes edge b -> a of weight c.
  constraints_.push_back({a, b, {c, strict ? 1L : 0L}});
}

void DifferenceSystem::add_equal(int a, int b, const Rational& c) {
  add_upper(a, b, c);
  add_upper(b, a, -c);
}

void DifferenceSystem::truncate(size_t mark) {
  assert(mark <= constraints_.size());
  constraints_.resize(mark);
}

bool DifferenceSystem::feasible() const {
  const int node_count = coordinate_count_ + 1;
  // Bellman-Ford from a virtual source connected to every node at distance 0.
  std::vector<LexWeight> dist(node_count, LexWeight{0, 0});
  for (int round = 0; round < node_count; ++round) {
    bool changed = false;
    for (const Constraint& con : constraints_) {
      LexWeight candidate = dist[con.b] + con.w;
      if (candidate < dist[con.a]) {
        dist[con.a] = candidate;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  // A relaxation in round node_count means a negative cycle.
  for (const Constraint& con : constraints_) {
    if (dist[con.b] + con.w < dist[con.a]) return false;
  }
  return true;
}

std::vector<std::optional<LexWeight>> DifferenceSystem::shortest_from(
    int source, const std::vector<Constraint>& constraints) const {
  const int node_count = coordinate_count_ + 1;
  std::vector<std::optional<LexWeight>> dist(node_count);
  dist[source] = LexWeight{0, 0};
  for (int round = 0; round < node_count; ++round) {
    bool changed = false;
    for (const Constraint& con : constraints) {
      if (!dist[con.b]) continue;
      LexWeight candidate = *dist[con.b] + con.w;
      if (!dist[con.a] || candidate < *dist[con.a]) {
        dist[con.a] = candidate;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

QVector DifferenceSystem::interior_point() const {
  if (!feasible()) fail(ErrorKind::Infeasible, "interior_point of infeasible system");
  const int n = coordinate_count_;
  std::vector<Constraint> work = constraints_;
  QVector point(n, Rational(0));

  for (int var = 1; var <= n; ++var) {
    // Tightest bounds implied by the current system:
    //   x_var <= dist(0 -> var)   and   x_var >= -dist(var -> 0).
    auto from_zero = shortest_from(0, work);
    auto to_zero_all = shortest_from(var, work);
    std::optional<LexWeight> upper = from_zero[var];
    std::optional<LexWeight> lower_raw = to_zero_all[0];

    Rational chosen;
    if (upper && lower_raw) {
      Rational hi = upper->value;
      Rational lo = -lower_raw->value;
      if (lo == hi) {
        // Forced value; strict bounds here would contradict feasibility.
        assert(upper->strict == 0 && lower_raw->strict == 0);
        chosen = hi;
      } else {
        chosen = (lo + hi) / 2;
      }
    } else if (upper) {
      chosen = upper->value - 1;
    } else if (lower_raw) {
      chosen = -lower_raw->value + 1;
    } else {
      chosen = 0;
    }

    point[var - 1] = chosen;
    work.push_back({var, 0, {chosen, 0}});
    work.push_back({0, var, {-chosen, 0}});
  }
  return point;
}

}  // namespace tropgenus
