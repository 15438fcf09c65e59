#include "tropgenus/trace.hpp"

#include <algorithm>
#include <set>

#include "tropgenus/errors.hpp"
#include "tropgenus/pebble.hpp"
#include "tropgenus/rigidity.hpp"

namespace tropgenus {

void validate_trace_problem(const TraceProblem& tp) {
  const Graph& g = tp.graph;
  if (tp.k < 0 || tp.k >= g.vertex_count)
    fail(ErrorKind::InvalidInput, "tracing vertex out of range");
  if (tp.k == tp.i || tp.k == tp.j)
    fail(ErrorKind::InvalidInput, "tracing vertex coincides with the fixed edge");
  auto base = g.edges[0];
  if (std::minmax(tp.i, tp.j) != std::minmax(base.first, base.second))
    fail(ErrorKind::PreconditionViolation,
         "fixed edge must be the base edge (relabel the graph first)");
}

ExtendedGraph extended_graph(const TraceProblem& tp) {
  validate_trace_problem(tp);
  const Graph& g = tp.graph;
  ExtendedGraph ext;
  ext.ik_existed = g.has_edge(tp.i, tp.k);
  ext.jk_existed = g.has_edge(tp.j, tp.k);
  auto edges = g.edges;
  if (!ext.ik_existed) edges.push_back(std::minmax(tp.i, tp.k));
  if (!ext.jk_existed) edges.push_back(std::minmax(tp.j, tp.k));
  ext.graph = make_graph(g.vertex_count, std::move(edges), g.edges[0]);
  return ext;
}

namespace {

Graph without_edge(const Graph& g, std::pair<int, int> drop) {
  if (drop.first > drop.second) std::swap(drop.first, drop.second);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size() - 1);
  for (const auto& e : g.edges) {
    if (e != drop) edges.push_back(e);
  }
  return make_graph(g.vertex_count, std::move(edges), g.edges[0]);
}

}  // namespace

TraceClass classify_trace(const TraceProblem& tp) {
  ExtendedGraph ext = extended_graph(tp);
  if (!is_rigid(ext.graph)) return TraceClass::Finite;
  if (ext.ik_existed || ext.jk_existed) return TraceClass::Circle;
  if (!is_rigid(without_edge(ext.graph, {tp.i, tp.k}))) return TraceClass::Circle;
  if (!is_rigid(without_edge(ext.graph, {tp.j, tp.k}))) return TraceClass::Circle;
  return TraceClass::Curve;
}

std::string Simplification::describe() const {
  std::string out;
  if (kind == Kind::First) {
    out = "first-kind: replaced rigid subgraph (removed vertices";
    for (int v : removed_vertices) out += " " + std::to_string(v + 1);
    out += ") by edge " + std::to_string(replacement_edge.first + 1) + "-" +
           std::to_string(replacement_edge.second + 1);
  } else {
    out = "second-kind: restricted to the rigidity circuit of the extended "
          "graph (" +
          std::to_string(retained_edges.size()) + " retained edges)";
  }
  return out;
}

namespace {

struct FirstKindCandidate {
  int u = -1, v = -1;
  std::vector<int> interior;  // vertices replaced (sorted)
};

// Search every separation pair of the extended graph for a rigid side whose
// interior avoids i, j, k. Larger rigid sides are preferred (fewer loop
// iterations downstream).
std::optional<FirstKindCandidate> find_first_kind(const Graph& g,
                                                  const Graph& ext,
                                                  int i, int j, int k) {
  std::optional<FirstKindCandidate> best;
  for (int u = 0; u < ext.vertex_count; ++u) {
    for (int v = u + 1; v < ext.vertex_count; ++v) {
      auto comp = components_after_removal(ext, u, v);
      int comp_count = 0;
      for (int id : comp) comp_count = std::max(comp_count, id + 1);
      if (comp_count < 2) continue;

      std::vector<std::vector<int>> members(comp_count);
      for (int x = 0; x < ext.vertex_count; ++x) {
        if (comp[x] >= 0) members[comp[x]].push_back(x);
      }
      std::vector<bool> allowed(comp_count, true);
      for (int c = 0; c < comp_count; ++c) {
        for (int x : members[c]) {
          if (x == i || x == j || x == k) allowed[c] = false;
        }
      }

      for (uint32_t mask = 1; mask < (uint32_t{1} << comp_count); ++mask) {
        bool ok = true;
        std::vector<int> interior;
        for (int c = 0; c < comp_count; ++c) {
          if (!(mask & (uint32_t{1} << c))) continue;
          if (!allowed[c]) {
            ok = false;
            break;
          }
          interior.insert(interior.end(), members[c].begin(), members[c].end());
        }
        if (!ok || interior.empty()) continue;

        // H is the induced subgraph of G (not of the extended graph) on the
        // side's vertices; the added trace edges never reach the interior.
        std::vector<int> side = interior;
        side.push_back(u);
        side.push_back(v);
        std::sort(side.begin(), side.end());
        std::vector<std::pair<int, int>> h_edges;
        std::set<int> side_set(side.begin(), side.end());
        for (const auto& e : g.edges) {
          if (side_set.count(e.first) && side_set.count(e.second))
            h_edges.push_back(e);
        }
        const int h_rank_needed = 2 * static_cast<int>(side.size()) - 3;
        if (pebble_rank(h_edges, g.vertex_count) != h_rank_needed) continue;

        std::sort(interior.begin(), interior.end());
        if (!best || interior.size() > best->interior.size()) {
          best = FirstKindCandidate{u, v, interior};
        }
      }
    }
  }
  return best;
}

Simplification build_first_kind(const TraceProblem& tp,
                                const FirstKindCandidate& cand) {
  const Graph& g = tp.graph;
  std::set<int> removed(cand.interior.begin(), cand.interior.end());
  std::vector<std::pair<int, int>> new_edges;
  for (const auto& e : g.edges) {
    if (removed.count(e.first) || removed.count(e.second)) continue;
    if (std::minmax(e.first, e.second) == std::minmax(cand.u, cand.v)) continue;
    new_edges.push_back(e);
  }
  new_edges.push_back(std::minmax(cand.u, cand.v));

  std::vector<int> keep;
  for (int x = 0; x < g.vertex_count; ++x) {
    if (!removed.count(x)) keep.push_back(x);
  }
  std::vector<int> map(g.vertex_count, -1);
  for (size_t idx = 0; idx < keep.size(); ++idx) map[keep[idx]] = static_cast<int>(idx);
  for (auto& e : new_edges) e = {map[e.first], map[e.second]};

  Simplification s;
  s.kind = Simplification::Kind::First;
  s.result = make_graph(static_cast<int>(keep.size()), std::move(new_edges),
                        {map[tp.i], map[tp.j]});
  s.i = map[tp.i];
  s.j = map[tp.j];
  s.k = map[tp.k];
  s.removed_vertices = cand.interior;
  s.replacement_edge = std::minmax(cand.u, cand.v);
  return s;
}

Simplification build_second_kind(const TraceProblem& tp, const Graph& ext) {
  std::vector<int> circuit = unique_rigidity_circuit(ext);
  std::set<int> circuit_set(circuit.begin(), circuit.end());

  auto require_in_circuit = [&](int a, int b, const char* what) {
    auto idx = ext.edge_index(a, b);
    if (!idx || !circuit_set.count(*idx))
      fail(ErrorKind::InternalError,
           std::string("rigidity circuit misses the ") + what + " edge");
  };
  require_in_circuit(tp.i, tp.k, "i-k trace");
  require_in_circuit(tp.j, tp.k, "j-k trace");
  require_in_circuit(tp.i, tp.j, "fixed");

  std::set<int> vertices;
  std::vector<std::pair<int, int>> retained;
  for (int e : circuit) {
    auto [a, b] = ext.edges[e];
    vertices.insert(a);
    vertices.insert(b);
    if (std::minmax(a, b) == std::minmax(tp.i, tp.k)) continue;
    if (std::minmax(a, b) == std::minmax(tp.j, tp.k)) continue;
    retained.push_back({a, b});
  }

  std::vector<int> keep(vertices.begin(), vertices.end());
  std::vector<int> map(ext.vertex_count, -1);
  for (size_t idx = 0; idx < keep.size(); ++idx) map[keep[idx]] = static_cast<int>(idx);

  Simplification s;
  s.kind = Simplification::Kind::Second;
  s.retained_edges = retained;
  for (auto& e : retained) e = {map[e.first], map[e.second]};
  s.result = make_graph(static_cast<int>(keep.size()), std::move(retained),
                        {map[tp.i], map[tp.j]});
  s.i = map[tp.i];
  s.j = map[tp.j];
  s.k = map[tp.k];
  return s;
}

}  // namespace

Simplification simplify_once(const TraceProblem& tp) {
  validate_trace_problem(tp);
  ExtendedGraph ext = extended_graph(tp);
  if (!is_rigid(ext.graph))
    fail(ErrorKind::PreconditionViolation,
         "extended graph is not rigid (the trace is finite)");
  if (is_globally_rigid(ext.graph))
    fail(ErrorKind::PreconditionViolation,
         "extended graph is globally rigid; nothing to simplify");

  Simplification s = [&] {
    if (!is_3_connected(ext.graph)) {
      if (auto cand = find_first_kind(tp.graph, ext.graph, tp.i, tp.j, tp.k))
        return build_first_kind(tp, *cand);
      // No separation pair admits a rigid side avoiding i, j, k; fall back
      // to the circuit restriction, which needs both trace edges absent.
    }
    if (ext.ik_existed || ext.jk_existed)
      fail(ErrorKind::InternalError,
           "no usable separation pair and a trace edge already present");
    return build_second_kind(tp, ext.graph);
  }();

  validate_one_dof(s.result);  // the proposition guarantees this
  return s;
}

TraceReport trace_genus(const TraceProblem& tp, const PipelineConfig& cfg) {
  TraceProblem current = tp;
  TraceReport report;
  while (true) {
    TraceClass cls = classify_trace(current);
    report.trace_class = cls;
    if (cls == TraceClass::Finite) return report;
    if (cls == TraceClass::Circle) {
      report.genus = 0;
      return report;
    }
    ExtendedGraph ext = extended_graph(current);
    if (is_globally_rigid(ext.graph)) {
      GenusReport curve = compute_genus(current.graph, cfg);
      report.genus = curve.genus;
      report.curve_report = std::move(curve);
      return report;
    }
    Simplification step = simplify_once(current);
    current = TraceProblem{step.result, step.i, step.j, step.k};
    report.steps.push_back(std::move(step));
  }
}

}  // namespace tropgenus
