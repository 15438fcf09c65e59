#include "tropgenus/seed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "tropgenus/difference_system.hpp"
#include "tropgenus/errors.hpp"
#include "tropgenus/linalg.hpp"

namespace tropgenus {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t base, uint64_t attempt) {
  return splitmix64(base ^ splitmix64(attempt + 1));
}

QVector random_weights(const SeedConfig& cfg, int n) {
  if (cfg.weight_bits < 8 || cfg.weight_bits > 62)
    fail(ErrorKind::InvalidInput, "weight_bits must be in [8, 62]");
  if (n < 0) fail(ErrorKind::InvalidInput, "negative dimension");
  std::mt19937_64 gen(cfg.rng_seed);
  // 2^64 is a multiple of 2^bits, so masking keeps the draw uniform and
  // reproducible across standard libraries.
  const uint64_t mask = (uint64_t{1} << cfg.weight_bits) - 1;
  std::set<uint64_t> seen;
  QVector weights;
  weights.reserve(n);
  while (static_cast<int>(weights.size()) < n) {
    uint64_t value = (gen() & mask) + 1;
    if (seen.insert(value).second) weights.push_back(Rational(value));
  }
  return weights;
}

namespace {

// Slot values as difference expressions over nodes 0..n: on side X the slot
// e carries u_e, on side Y it carries w_e - u_e, and slot 0 is identically
// zero. "expr(s) <= expr(g)" and "expr(s) = expr(t)" reduce to single
// difference constraints in all side/slot combinations.
struct LevelConstraints {
  Side side;
  const QVector& weights;
  DifferenceSystem& sys;

  void tie(int s, int t) {
    if (s > t) std::swap(s, t);  // put a possible constant slot first
    if (side == Side::X) {
      if (s == 0)
        sys.add_equal(t, 0, Rational(0));
      else
        sys.add_equal(s, t, Rational(0));
    } else {
      if (s == 0)
        sys.add_equal(t, 0, weights[t - 1]);
      else
        sys.add_equal(s, t, weights[s - 1] - weights[t - 1]);
    }
  }

  void minimal(int s, int g) {  // expr(s) <= expr(g)
    if (side == Side::X) {
      if (s == 0)
        sys.add_upper(0, g, Rational(0));
      else if (g == 0)
        sys.add_upper(s, 0, Rational(0));
      else
        sys.add_upper(s, g, Rational(0));
    } else {
      if (s == 0)
        sys.add_upper(g, 0, weights[g - 1]);
      else if (g == 0)
        sys.add_upper(0, s, -weights[s - 1]);
      else
        sys.add_upper(g, s, weights[g - 1] - weights[s - 1]);
    }
  }
};

struct SupportSearch {
  const Graph& g;
  const std::vector<Circuit>& circuits;
  const QVector& weights;
  const SeedConfig& cfg;
  std::vector<std::pair<int, Side>> levels;  // (circuit index, side)
  DifferenceSystem sys;
  std::vector<std::array<int, 2>> choice;
  uint64_t nodes = 0;
  bool budget_hit = false;

  std::optional<StartPoint> run() {
    choice.clear();
    return descend(0);
  }

  std::optional<StartPoint> descend(size_t level) {
    if (level == levels.size()) return finish();
    const auto& [ci, side] = levels[level];
    const std::vector<int>& slots = circuits[ci].edges;
    LevelConstraints add{side, weights, sys};
    for (size_t i = 0; i < slots.size(); ++i) {
      for (size_t j = i + 1; j < slots.size(); ++j) {
        if (budget_hit) return std::nullopt;
        if (++nodes > cfg.node_budget) {
          budget_hit = true;
          return std::nullopt;
        }
        const size_t mark = sys.size();
        add.tie(slots[i], slots[j]);
        for (size_t k = 0; k < slots.size(); ++k) {
          if (k != i && k != j) add.minimal(slots[i], slots[k]);
        }
        if (sys.feasible()) {
          choice.push_back({slots[i], slots[j]});
          if (auto found = descend(level + 1)) return found;
          choice.pop_back();
        }
        sys.truncate(mark);
      }
    }
    return std::nullopt;
  }

  std::optional<StartPoint> finish() {
    QVector point = sys.interior_point();
    PointAnalysis analysis = analyze_point(point, circuits, weights);
    if (!analysis.on_curve) return std::nullopt;

    const int n = g.coordinate_count();
    TieClasses combined = tie_classes(analysis, circuits, n, std::nullopt);
    const int dimension = static_cast<int>(combined.free_classes.size());
    if (dimension > 1) return std::nullopt;
    if (!transversal_at(point, circuits, weights)) return std::nullopt;

    StartPoint sp;
    sp.point = std::move(point);
    sp.face_dimension = dimension;
    sp.support_choice = choice;
    sp.nodes_explored = nodes;
    return sp;
  }
};

// Circuit processing order: fundamental cycles of a BFS spanning tree first
// (they constrain most coordinates early), remaining circuits by increasing
// length.
std::vector<int> circuit_order(const Graph& g,
                               const std::vector<Circuit>& circuits) {
  auto adj = g.adjacency();
  std::vector<int> parent(g.vertex_count, -1);
  std::vector<int> level(g.vertex_count, 0);
  std::vector<bool> seen(g.vertex_count, false);
  for (int root = 0; root < g.vertex_count; ++root) {
    if (seen[root]) continue;
    std::vector<int> queue = {root};
    seen[root] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = x;
          level[y] = level[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  std::set<int> tree_edges;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (parent[v] >= 0) tree_edges.insert(*g.edge_index(v, parent[v]));
  }

  std::map<std::vector<int>, int> circuit_lookup;
  for (size_t i = 0; i < circuits.size(); ++i)
    circuit_lookup[circuits[i].edges] = static_cast<int>(i);

  auto depth = [&](int v) { return level[v]; };

  std::vector<int> order;
  std::vector<bool> placed(circuits.size(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edges.count(e)) continue;
    auto [a, b] = g.edges[e];
    // Fundamental cycle of the non-tree edge: walk both endpoints up to the
    // common ancestor.
    std::vector<int> cycle_edges = {e};
    int x = a, y = b;
    while (depth(x) > depth(y)) {
      cycle_edges.push_back(*g.edge_index(x, parent[x]));
      x = parent[x];
    }
    while (depth(y) > depth(x)) {
      cycle_edges.push_back(*g.edge_index(y, parent[y]));
      y = parent[y];
    }
    while (x != y) {
      cycle_edges.push_back(*g.edge_index(x, parent[x]));
      cycle_edges.push_back(*g.edge_index(y, parent[y]));
      x = parent[x];
      y = parent[y];
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    auto it = circuit_lookup.find(cycle_edges);
    if (it != circuit_lookup.end() && !placed[it->second]) {
      placed[it->second] = true;
      order.push_back(it->second);
    }
  }
  for (size_t i = 0; i < circuits.size(); ++i) {
    if (!placed[i]) order.push_back(static_cast<int>(i));
  }
  return order;
}

}  // namespace

std::optional<StartPoint> find_start(const Graph& g,
                                     const std::vector<Circuit>& circuits,
                                     const QVector& weights,
                                     const SeedConfig& cfg) {
  validate_weights(weights);
  const int n = g.coordinate_count();
  if (static_cast<int>(weights.size()) != n)
    fail(ErrorKind::DimensionMismatch, "weight vector of wrong dimension");

  SupportSearch search{g, circuits, weights, cfg, {}, DifferenceSystem(n), {}};
  std::vector<int> order;
  if (cfg.circuit_order == CircuitOrder::FundamentalFirst) {
    order = circuit_order(g, circuits);
  } else {
    order.resize(circuits.size());
    std::iota(order.begin(), order.end(), 0);  // enumeration is shortest-first
  }
  for (int ci : order) {
    search.levels.push_back({ci, Side::X});
    search.levels.push_back({ci, Side::Y});
  }
  return search.run();
}

}  // namespace tropgenus
