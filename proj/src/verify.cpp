#include "tropgenus/verify.hpp"

#include <numeric>
#include <string>

namespace tropgenus {

namespace {

std::string check_vertex_structure(const TropicalCurve& curve,
                                   bool check_trivalence) {
  const size_t vc = curve.vertices.size();
  if (vc == 0) return "curve has no vertices";
  const int n = static_cast<int>(curve.vertices[0].size());

  std::vector<std::vector<int>> outward(vc);  // flattened direction sums
  std::vector<int> valence(vc, 0);
  for (auto& sums : outward) sums.assign(n, 0);

  for (const auto& e : curve.bounded_edges) {
    ++valence[e.a];
    ++valence[e.b];
    for (int i = 0; i < n; ++i) {
      outward[e.a][i] += e.direction[i];
      outward[e.b][i] -= e.direction[i];
    }
  }
  for (const auto& r : curve.rays) {
    ++valence[r.vertex];
    for (int i = 0; i < n; ++i) outward[r.vertex][i] += r.direction[i];
  }

  for (size_t v = 0; v < vc; ++v) {
    if (check_trivalence && valence[v] != 3)
      return "vertex " + std::to_string(v) + " has valence " +
             std::to_string(valence[v]);
    for (int i = 0; i < n; ++i) {
      if (outward[v][i] != 0)
        return "outward directions at vertex " + std::to_string(v) +
               " do not balance";
    }
  }
  return "";
}

std::string check_edge_geometry(const TropicalCurve& curve,
                                const std::vector<Circuit>& circuits,
                                const QVector& weights, size_t sample_reverse) {
  size_t reversed = 0;
  for (size_t idx = 0; idx < curve.bounded_edges.size(); ++idx) {
    const auto& e = curve.bounded_edges[idx];
    if (e.length <= 0) return "edge " + std::to_string(idx) + " has non-positive length";

    bool saw_nonzero = false;
    int sign = 0;
    for (int d : e.direction) {
      if (d == 0) continue;
      saw_nonzero = true;
      if (d != 1 && d != -1) return "edge direction entry outside {-1,0,1}";
      if (sign == 0) sign = d;
      if (d != sign) return "edge direction mixes signs";
    }
    if (!saw_nonzero) return "edge with zero direction";

    const QVector& a = curve.vertices[e.a];
    const QVector& b = curve.vertices[e.b];
    QVector midpoint(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      Rational end = a[i] + e.length * e.direction[i];
      if (end != b[i]) return "edge endpoints inconsistent with direction/length";
      midpoint[i] = (a[i] + b[i]) / 2;
    }
    if (!on_curve(midpoint, circuits, weights))
      return "midpoint of edge " + std::to_string(idx) + " is off the curve";

    if (sample_reverse == 0 || reversed < sample_reverse) {
      ++reversed;
      Direction back(e.direction.size());
      for (size_t i = 0; i < e.direction.size(); ++i) back[i] = -e.direction[i];
      TravelOutcome out = travel(b, back, circuits, weights);
      if (!out.bounded || out.step != e.length || out.next != a)
        return "reverse travel along edge " + std::to_string(idx) +
               " does not return to the origin vertex";
    }
  }
  return "";
}

}  // namespace

std::string curve_inconsistency(const TropicalCurve& curve,
                                const std::vector<Circuit>& circuits,
                                const QVector& weights, size_t sample_reverse,
                                bool check_trivalence) {
  for (size_t v = 0; v < curve.vertices.size(); ++v) {
    if (!on_curve(curve.vertices[v], circuits, weights))
      return "vertex " + std::to_string(v) + " is off the curve";
  }
  if (auto msg = check_vertex_structure(curve, check_trivalence); !msg.empty())
    return msg;
  if (auto msg = check_edge_geometry(curve, circuits, weights, sample_reverse);
      !msg.empty())
    return msg;
  if (!curve_connected(curve)) return "curve is not connected";
  return "";
}

bool curve_connected(const TropicalCurve& curve) {
  const size_t vc = curve.vertices.size();
  if (vc == 0) return false;
  std::vector<std::vector<int>> adj(vc);
  for (const auto& e : curve.bounded_edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> visited(vc, false);
  std::vector<int> stack = {0};
  visited[0] = true;
  size_t seen = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!visited[y]) {
        visited[y] = true;
        ++seen;
        stack.push_back(y);
      }
    }
  }
  return seen == vc;
}

}  // namespace tropgenus
