#include "tropgenus/curve_document.hpp"

#include <string>

#include "tropgenus/errors.hpp"
#include "tropgenus/graph_io.hpp"

namespace tropgenus {

nlohmann::ordered_json curve_document(const Graph& g, const GenusReport& report) {
  nlohmann::ordered_json doc;
  doc["graph"] = graph_to_json(g);

  auto weights = nlohmann::ordered_json::array();
  for (const Rational& w : report.weights) weights.push_back(to_fraction(w));
  doc["weights"] = std::move(weights);

  auto vertices = nlohmann::ordered_json::array();
  for (size_t id = 0; id < report.curve.vertices.size(); ++id) {
    nlohmann::ordered_json v;
    v["id"] = id;
    auto coords = nlohmann::ordered_json::array();
    for (const Rational& c : report.curve.vertices[id])
      coords.push_back(to_fraction(c));
    v["coords"] = std::move(coords);
    vertices.push_back(std::move(v));
  }
  doc["vertices"] = std::move(vertices);

  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : report.curve.bounded_edges) {
    nlohmann::ordered_json item;
    item["a"] = e.a;
    item["b"] = e.b;
    item["direction"] = e.direction;
    item["length"] = to_fraction(e.length);
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);

  auto rays = nlohmann::ordered_json::array();
  for (const auto& r : report.curve.rays) {
    nlohmann::ordered_json item;
    item["vertex"] = r.vertex;
    item["direction"] = r.direction;
    rays.push_back(std::move(item));
  }
  doc["rays"] = std::move(rays);

  doc["genus"] = report.genus;
  doc["counters"] = {{"restarts", report.restarts},
                     {"search_nodes", report.search_nodes},
                     {"transversality_checks", report.transversality_checks}};
  return doc;
}

ParsedDocument parse_curve_document(const nlohmann::json& doc) {
  ParsedDocument out;
  try {
    out.graph = parse_graph_json(doc.at("graph"));
    for (const auto& w : doc.at("weights"))
      out.weights.push_back(parse_fraction(w.get<std::string>()));
    for (const auto& v : doc.at("vertices")) {
      QVector coords;
      for (const auto& c : v.at("coords"))
        coords.push_back(parse_fraction(c.get<std::string>()));
      out.curve.vertices.push_back(std::move(coords));
    }
    for (const auto& e : doc.at("edges")) {
      TropicalCurve::Edge edge;
      edge.a = e.at("a").get<int>();
      edge.b = e.at("b").get<int>();
      edge.direction = e.at("direction").get<std::vector<int>>();
      edge.length = parse_fraction(e.at("length").get<std::string>());
      out.curve.bounded_edges.push_back(std::move(edge));
    }
    for (const auto& r : doc.at("rays")) {
      TropicalCurve::Ray ray;
      ray.vertex = r.at("vertex").get<int>();
      ray.direction = r.at("direction").get<std::vector<int>>();
      out.curve.rays.push_back(std::move(ray));
    }
    out.genus = doc.at("genus").get<int>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("curve document: ") + e.what());
  }
  return out;
}

std::string document_inconsistency(const ParsedDocument& doc) {
  const int n = doc.graph.coordinate_count();
  if (static_cast<int>(doc.weights.size()) != n) return "weight dimension mismatch";
  std::vector<Circuit> circuits = enumerate_circuits(doc.graph);

  const auto vertex_count = static_cast<int>(doc.curve.vertices.size());
  for (int id = 0; id < vertex_count; ++id) {
    const QVector& p = doc.curve.vertices[id];
    if (static_cast<int>(p.size()) != n) return "vertex dimension mismatch";
    if (!on_curve(p, circuits, doc.weights))
      return "vertex " + std::to_string(id) + " is off the curve";
  }
  for (const auto& e : doc.curve.bounded_edges) {
    if (e.a < 0 || e.a >= vertex_count || e.b < 0 || e.b >= vertex_count)
      return "edge endpoint id out of range";
    if (e.length <= 0) return "non-positive edge length";
    for (int i = 0; i < n; ++i) {
      Rational expected = doc.curve.vertices[e.a][i] + e.length * e.direction[i];
      if (expected != doc.curve.vertices[e.b][i])
        return "edge endpoints do not differ by length * direction";
    }
  }
  for (const auto& r : doc.curve.rays) {
    if (r.vertex < 0 || r.vertex >= vertex_count)
      return "ray vertex id out of range";
  }
  const int recomputed = static_cast<int>(doc.curve.bounded_edges.size()) -
                         vertex_count + 1;
  if (recomputed != doc.genus) return "genus does not match edge/vertex counts";
  return "";
}

}  // namespace tropgenus
