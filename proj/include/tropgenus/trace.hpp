// Vertex traces: classify the trace of a vertex while the base edge is held
// fixed, simplify the graph until the extended graph is globally rigid, and
// delegate the genus computation to the curve pipeline.
#pragma once

#include <optional>
#include <string>

#include "tropgenus/graph.hpp"
#include "tropgenus/traversal.hpp"

namespace tropgenus {

struct TraceProblem {
  Graph graph;
  int i = 0, j = 0, k = 0;  // fixed edge {i,j} (must be the base edge), tracer k
};

void validate_trace_problem(const TraceProblem& tp);

struct ExtendedGraph {
  Graph graph;  // G plus {i,k} and {j,k}
  bool ik_existed = false;
  bool jk_existed = false;
};

ExtendedGraph extended_graph(const TraceProblem& tp);

enum class TraceClass { Finite, Circle, Curve };

inline const char* trace_class_name(TraceClass c) {
  switch (c) {
    case TraceClass::Finite: return "finite";
    case TraceClass::Circle: return "circle";
    case TraceClass::Curve: return "curve";
  }
  return "unknown";
}

// Finite when the extended graph is not rigid; circle when one of {i,k},
// {j,k} is already an edge or removing it from the extended graph loses
// rigidity; curve otherwise.
TraceClass classify_trace(const TraceProblem& tp);

struct Simplification {
  enum class Kind { First, Second };
  Kind kind;
  Graph result;
  int i = 0, j = 0, k = 0;  // relabelled onto `result`

  // Description in the labels of the input graph.
  std::vector<int> removed_vertices;
  std::pair<int, int> replacement_edge{-1, -1};        // first kind
  std::vector<std::pair<int, int>> retained_edges;     // second kind
  std::string describe() const;
};

// One simplification step: a first-kind replacement of a rigid hanging
// subgraph by an edge when the extended graph has a usable separation pair,
// else a second-kind restriction to the unique rigidity circuit of the
// extended graph. Requires the extended graph rigid and not globally rigid.
Simplification simplify_once(const TraceProblem& tp);

struct TraceReport {
  TraceClass trace_class = TraceClass::Curve;
  std::optional<int> genus;  // absent for finite traces
  std::vector<Simplification> steps;
  std::optional<GenusReport> curve_report;
};

TraceReport trace_genus(const TraceProblem& tp, const PipelineConfig& cfg = {});

}  // namespace tropgenus
