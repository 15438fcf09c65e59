// The machine-readable curve document: graph echo, weights, exact vertex
// coordinates, bounded edges, rays, genus and run counters. Rationals are
// serialised as canonical "p/q" strings; the document is the verification
// artifact, so nothing in it is ever a float.
#pragma once

#include <json.hpp>

#include "tropgenus/graph.hpp"
#include "tropgenus/traversal.hpp"

namespace tropgenus {

nlohmann::ordered_json curve_document(const Graph& g, const GenusReport& report);

struct ParsedDocument {
  Graph graph;
  QVector weights;
  TropicalCurve curve;
  int genus = 0;
};

ParsedDocument parse_curve_document(const nlohmann::json& doc);

// Re-checks a parsed document from scratch: every vertex satisfies the curve
// constraints, edge endpoints differ by length * direction, and the genus
// matches the edge/vertex counts. Returns an empty string when consistent,
// otherwise the first violation.
std::string document_inconsistency(const ParsedDocument& doc);

}  // namespace tropgenus
