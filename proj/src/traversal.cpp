#include "tropgenus/traversal.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "tropgenus/errors.hpp"
#include "tropgenus/linalg.hpp"
#include "tropgenus/rigidity.hpp"

namespace tropgenus {

namespace {

int slope_of(int slot, Side side, const Direction& d) {
  if (slot == 0) return 0;
  return side == Side::X ? d[slot - 1] : -d[slot - 1];
}

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
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

BlockPartition blocks_from(const PointAnalysis& analysis,
                           const std::vector<Circuit>& circuits, int n) {
  UnionFind uf(n);
  for (int s = 0; s < 2; ++s) {
    for (size_t ci = 0; ci < circuits.size(); ++ci) {
      const auto& argmin = analysis.table[s][ci].argmin;
      // Algorithm guard: only minima attained exactly twice yield a pair.
      if (argmin.size() != 2) continue;
      uf.unite(argmin[0], argmin[1]);
    }
  }
  BlockPartition blocks;
  std::vector<std::vector<int>> by_root(n + 1);
  for (int e = 1; e <= n; ++e) by_root[uf.find(e)].push_back(e);
  blocks.frozen = by_root[0];
  for (int root = 1; root <= n; ++root) {
    if (!by_root[root].empty()) blocks.free_blocks.push_back(by_root[root]);
  }
  return blocks;
}

bool direction_feasible(const PointAnalysis& analysis,
                        const std::vector<Circuit>& circuits,
                        const Direction& d) {
  // Lexicographic (value, slope) rule: the minimum pair has the row's
  // minimal value, so only argmin slots compete; among them the smallest
  // slope must be attained at least twice.
  for (int s = 0; s < 2; ++s) {
    Side side = s == 0 ? Side::X : Side::Y;
    for (size_t ci = 0; ci < circuits.size(); ++ci) {
      const auto& argmin = analysis.table[s][ci].argmin;
      int best = 0;
      int hits = 0;
      for (int slot : argmin) {
        int slope = slope_of(slot, side, d);
        if (hits == 0 || slope < best) {
          best = slope;
          hits = 1;
        } else if (slope == best) {
          ++hits;
        }
      }
      if (hits < 2) return false;
    }
  }
  return true;
}

std::vector<Direction> directions_from(const PointAnalysis& analysis,
                                       const std::vector<Circuit>& circuits,
                                       int n, int block_cap) {
  BlockPartition blocks = blocks_from(analysis, circuits, n);
  const size_t k = blocks.free_blocks.size();
  if (static_cast<int>(k) > block_cap)
    fail(ErrorKind::BlockCapExceeded,
         std::to_string(k) + " free blocks exceed the cap of " +
             std::to_string(block_cap));

  std::vector<Direction> feasible;
  for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
    Direction d(n, 0);
    for (size_t b = 0; b < k; ++b) {
      if (mask & (uint64_t{1} << b)) {
        for (int e : blocks.free_blocks[b]) d[e - 1] = 1;
      }
    }
    if (direction_feasible(analysis, circuits, d)) feasible.push_back(d);
    Direction neg(n, 0);
    for (int i = 0; i < n; ++i) neg[i] = -d[i];
    if (direction_feasible(analysis, circuits, neg))
      feasible.push_back(std::move(neg));
  }
  std::sort(feasible.begin(), feasible.end());
  return feasible;
}

bool transversal_from(const PointAnalysis& analysis,
                      const std::vector<Circuit>& circuits, int n);

// First positive time at which some slot overtakes a moving minimum, or
// nullopt when the direction runs to infinity unobstructed. Throws when the
// direction is infeasible at the origin point.
std::optional<Rational> first_event_time(const PointAnalysis& analysis,
                                         const QVector& v, const Direction& d,
                                         const std::vector<Circuit>& circuits,
                                         const QVector& weights) {
  std::optional<Rational> first_event;
  for (int s = 0; s < 2; ++s) {
    Side side = s == 0 ? Side::X : Side::Y;
    for (size_t ci = 0; ci < circuits.size(); ++ci) {
      const auto& row = analysis.table[s][ci];
      int min_slope = 0;
      int hits = 0;
      for (int slot : row.argmin) {
        int slope = slope_of(slot, side, d);
        if (hits == 0 || slope < min_slope) {
          min_slope = slope;
          hits = 1;
        } else if (slope == min_slope) {
          ++hits;
        }
      }
      if (hits < 2)
        fail(ErrorKind::PreconditionViolation,
             "travel direction is not feasible at the origin point");
      // The moving minimum is row.min_value + min_slope * t. A slot above
      // the minimum with a smaller slope catches up at a positive time.
      for (int slot : circuits[ci].edges) {
        Rational value = slot_value(slot, v, side, weights);
        if (value == row.min_value) continue;
        int slope = slope_of(slot, side, d);
        if (slope >= min_slope) continue;
        Rational event = (value - row.min_value) / Rational(min_slope - slope);
        if (!first_event || event < *first_event) first_event = event;
      }
    }
  }
  return first_event;
}

// Travel stops at a vertex of the curve, not merely at the first argmin
// change: when slots hand off the minimum simultaneously, the curve passes
// straight through and the walk continues. Each pass-through point still has
// to look like an edge interior (exactly the two antipodal directions) and
// be a transversal intersection, otherwise the weights are bad and the
// traversal aborts.
TravelOutcome travel_from(const PointAnalysis& start_analysis, const QVector& v,
                          const Direction& d,
                          const std::vector<Circuit>& circuits,
                          const QVector& weights, int block_cap = 25) {
  const int n = static_cast<int>(v.size());
  PointAnalysis analysis = start_analysis;
  QVector cur = v;
  Rational total(0);

  for (int hop = 0;; ++hop) {
    if (hop > 10000)
      fail(ErrorKind::InternalError, "travel crossed too many event points");
    auto event = first_event_time(analysis, cur, d, circuits, weights);
    TravelOutcome out;
    if (!event) return out;  // unbounded ray

    total += *event;
    for (int i = 0; i < n; ++i) {
      if (d[i] != 0) cur[i] += *event * d[i];
    }
    analysis = analyze_point(cur, circuits, weights);
    if (!analysis.on_curve)
      fail(ErrorKind::InternalError, "travel left the curve");

    if (!direction_feasible(analysis, circuits, d)) {
      out.bounded = true;
      out.step = total;
      out.next = std::move(cur);
      return out;
    }

    // Straight pass-through: verify the point is an ordinary edge point.
    if (!transversal_from(analysis, circuits, n))
      fail(ErrorKind::NonTransversalVertex,
           "non-transversal pass-through point at " + to_fraction_list(cur));
    auto dirs = directions_from(analysis, circuits, n, block_cap);
    bool plain_edge_point = dirs.size() == 2;
    if (plain_edge_point) {
      for (size_t i = 0; i < d.size() && plain_edge_point; ++i) {
        if (dirs[0][i] != -dirs[1][i]) plain_edge_point = false;
      }
    }
    if (!plain_edge_point)
      fail(ErrorKind::NonTrivalentVertex,
           "branching pass-through point at " + to_fraction_list(cur));
  }
}

bool transversal_from(const PointAnalysis& analysis,
                      const std::vector<Circuit>& circuits, int n) {
  std::vector<QVector> bases[2];
  for (int s = 0; s < 2; ++s) {
    Side side = s == 0 ? Side::X : Side::Y;
    TieClasses classes = tie_classes(analysis, circuits, n, side);
    for (const auto& cls : classes.free_classes) {
      QVector indicator(n, Rational(0));
      for (int e : cls) indicator[e - 1] = 1;
      bases[s].push_back(std::move(indicator));
    }
  }
  return sum_of_spans_is_full(bases[0], bases[1], n);
}

std::string point_key(const QVector& p) {
  std::string key;
  for (const Rational& c : p) {
    key += to_fraction(c);
    key += ',';
  }
  return key;
}

PointAnalysis analysis_or_throw(const QVector& v,
                                const std::vector<Circuit>& circuits,
                                const QVector& weights) {
  PointAnalysis analysis = analyze_point(v, circuits, weights);
  if (!analysis.on_curve)
    fail(ErrorKind::PreconditionViolation, "point is not on the curve");
  return analysis;
}

}  // namespace

BlockPartition blocks_at(const QVector& v, const std::vector<Circuit>& circuits,
                         const QVector& weights) {
  PointAnalysis analysis = analysis_or_throw(v, circuits, weights);
  return blocks_from(analysis, circuits, static_cast<int>(v.size()));
}

std::vector<Direction> candidate_directions(
    const QVector& v, const std::vector<Circuit>& circuits,
    const QVector& weights, int block_cap) {
  PointAnalysis analysis = analysis_or_throw(v, circuits, weights);
  return directions_from(analysis, circuits, static_cast<int>(v.size()),
                         block_cap);
}

TravelOutcome travel(const QVector& v, const Direction& d,
                     const std::vector<Circuit>& circuits,
                     const QVector& weights) {
  PointAnalysis analysis = analysis_or_throw(v, circuits, weights);
  return travel_from(analysis, v, d, circuits, weights);
}

namespace {

struct VertexWork {
  bool transversal = false;
  std::vector<Direction> dirs;
  std::vector<TravelOutcome> outcomes;
};

VertexWork process_vertex(const QVector& point,
                          const std::vector<Circuit>& circuits,
                          const QVector& weights, int block_cap) {
  const int n = static_cast<int>(point.size());
  PointAnalysis analysis = analyze_point(point, circuits, weights);
  if (!analysis.on_curve)
    fail(ErrorKind::InternalError, "traversal produced an off-curve point");
  VertexWork work;
  work.transversal = transversal_from(analysis, circuits, n);
  work.dirs = directions_from(analysis, circuits, n, block_cap);
  work.outcomes.reserve(work.dirs.size());
  for (const Direction& d : work.dirs) {
    work.outcomes.push_back(
        travel_from(analysis, point, d, circuits, weights, block_cap));
  }
  return work;
}

std::vector<VertexWork> process_wave(const std::vector<int>& wave,
                                     const std::vector<QVector>& points,
                                     const std::vector<Circuit>& circuits,
                                     const QVector& weights,
                                     const TraversalConfig& cfg) {
  std::vector<VertexWork> results(wave.size());
  if (cfg.threads <= 1 || wave.size() < 2) {
    for (size_t i = 0; i < wave.size(); ++i) {
      results[i] = process_vertex(points[wave[i]], circuits, weights,
                                  cfg.block_cap);
    }
    return results;
  }

  const size_t thread_count =
      std::min<size_t>(static_cast<size_t>(cfg.threads), wave.size());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(thread_count);
  std::atomic<size_t> cursor{0};
  for (size_t t = 0; t < thread_count; ++t) {
    pool.emplace_back([&, t] {
      try {
        while (true) {
          size_t i = cursor.fetch_add(1);
          if (i >= wave.size()) break;
          results[i] = process_vertex(points[wave[i]], circuits, weights,
                                      cfg.block_cap);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

Direction negated(const Direction& d) {
  Direction out(d.size());
  for (size_t i = 0; i < d.size(); ++i) out[i] = -d[i];
  return out;
}

}  // namespace

TropicalCurve traverse(const StartPoint& start,
                       const std::vector<Circuit>& circuits,
                       const QVector& weights, const TraversalConfig& cfg,
                       TraversalStats* stats) {
  const int n = static_cast<int>(start.point.size());
  size_t checks = 0;

  // An edge-interior start (exactly two antipodal directions) is not a
  // vertex of the curve; walk to a bounded end first and explore from
  // there, so every recorded vertex is a real one.
  QVector origin = start.point;
  {
    PointAnalysis analysis = analyze_point(origin, circuits, weights);
    if (!analysis.on_curve)
      fail(ErrorKind::PreconditionViolation, "start point is not on the curve");
    if (!transversal_from(analysis, circuits, n))
      fail(ErrorKind::NonTransversalVertex, "non-transversal start point");
    ++checks;
    auto dirs = directions_from(analysis, circuits, n, cfg.block_cap);
    if (dirs.size() == 2 && dirs[0] == negated(dirs[1])) {
      TravelOutcome one =
          travel_from(analysis, origin, dirs[0], circuits, weights, cfg.block_cap);
      TravelOutcome two =
          travel_from(analysis, origin, dirs[1], circuits, weights, cfg.block_cap);
      if (!one.bounded && !two.bounded) {
        // The component is a single line; keep the start as its marker.
        TropicalCurve line;
        line.vertices.push_back(origin);
        line.rays.push_back({0, dirs[0]});
        line.rays.push_back({0, dirs[1]});
        if (stats) stats->transversality_checks = checks;
        return line;
      }
      origin = one.bounded ? one.next : two.next;
    }
  }

  TropicalCurve curve;
  std::unordered_map<std::string, int> index;
  curve.vertices.push_back(origin);
  index[point_key(origin)] = 0;

  std::map<std::pair<int, int>, size_t> edge_seen;
  std::vector<int> frontier = {0};

  while (!frontier.empty()) {
    std::vector<int> wave;
    wave.swap(frontier);
    auto results = process_wave(wave, curve.vertices, circuits, weights, cfg);

    for (size_t wi = 0; wi < wave.size(); ++wi) {
      const int id = wave[wi];
      const VertexWork& work = results[wi];
      ++checks;
      if (!work.transversal)
        fail(ErrorKind::NonTransversalVertex,
             "non-transversal intersection at " +
                 to_fraction_list(curve.vertices[id]));
      if (work.dirs.size() != 3) {
        fail(ErrorKind::NonTrivalentVertex,
             "vertex of valence " + std::to_string(work.dirs.size()) + " at " +
                 to_fraction_list(curve.vertices[id]));
      }

      for (size_t di = 0; di < work.dirs.size(); ++di) {
        const TravelOutcome& outcome = work.outcomes[di];
        if (!outcome.bounded) {
          curve.rays.push_back({id, work.dirs[di]});
          continue;
        }
        int other;
        auto it = index.find(point_key(outcome.next));
        if (it != index.end()) {
          other = it->second;
        } else {
          if (curve.vertices.size() >= cfg.vertex_budget)
            fail(ErrorKind::VertexBudgetExceeded,
                 "more than " + std::to_string(cfg.vertex_budget) +
                     " curve vertices");
          other = static_cast<int>(curve.vertices.size());
          curve.vertices.push_back(outcome.next);
          index[point_key(outcome.next)] = other;
          frontier.push_back(other);
        }
        auto key = std::minmax(id, other);
        if (edge_seen.emplace(key, curve.bounded_edges.size()).second) {
          curve.bounded_edges.push_back(
              {id, other, work.dirs[di], outcome.step});
        }
      }
    }
  }

  if (stats) stats->transversality_checks = checks;
  return curve;
}

int genus(const TropicalCurve& curve) {
  return static_cast<int>(curve.bounded_edges.size()) -
         static_cast<int>(curve.vertices.size()) + 1;
}

GenusReport compute_genus(const Graph& g, const PipelineConfig& cfg) {
  validate_one_dof(g);
  std::vector<Circuit> circuits = enumerate_circuits(g, cfg.circuit_cap);
  const int n = g.coordinate_count();

  std::string history;
  for (int attempt = 0; attempt < cfg.max_restarts; ++attempt) {
    SeedConfig seed_cfg;
    seed_cfg.rng_seed = derive_seed(cfg.rng_seed, attempt);
    seed_cfg.weight_bits = cfg.weight_bits;
    seed_cfg.node_budget = cfg.node_budget;
    QVector weights = random_weights(seed_cfg, n);

    auto start = find_start(g, circuits, weights, seed_cfg);
    if (!start) {
      history += "attempt " + std::to_string(attempt) + ": search exhausted; ";
      continue;
    }
    TraversalConfig traversal_cfg;
    traversal_cfg.vertex_budget = cfg.vertex_budget;
    traversal_cfg.block_cap = cfg.block_cap;
    traversal_cfg.threads = cfg.threads;
    TraversalStats stats;
    try {
      TropicalCurve curve =
          traverse(*start, circuits, weights, traversal_cfg, &stats);
      GenusReport report;
      report.genus = genus(curve);
      report.vertex_count = curve.vertices.size();
      report.bounded_edge_count = curve.bounded_edges.size();
      report.ray_count = curve.rays.size();
      report.weights = weights;
      report.restarts = attempt;
      report.transversality_checks = stats.transversality_checks;
      report.search_nodes = start->nodes_explored;
      report.curve = std::move(curve);
      return report;
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::NonTransversalVertex:
        case ErrorKind::NonTrivalentVertex:
        case ErrorKind::BlockCapExceeded:
        case ErrorKind::VertexBudgetExceeded:
          history += "attempt " + std::to_string(attempt) + ": " +
                     std::string(error_kind_name(e.kind())) + "; ";
          continue;
        default:
          throw;
      }
    }
  }
  fail(ErrorKind::RestartsExhausted,
       "no attempt succeeded after " + std::to_string(cfg.max_restarts) +
           " restarts [" + history + "]");
}

}  // namespace tropgenus
