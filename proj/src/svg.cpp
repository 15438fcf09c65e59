#include "tropgenus/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "tropgenus/errors.hpp"

namespace tropgenus {

ProjectionSpec parse_projection(const std::string& text) {
  ProjectionSpec spec;
  if (text == "pca" || text.empty()) {
    spec.kind = ProjectionSpec::Kind::Pca;
    return spec;
  }
  if (text == "random") {
    spec.kind = ProjectionSpec::Kind::Random;
    return spec;
  }
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      spec.kind = ProjectionSpec::Kind::Coords;
      spec.coord_a = std::stoi(text.substr(0, comma));
      spec.coord_b = std::stoi(text.substr(comma + 1));
      if (spec.coord_a >= 1 && spec.coord_b >= 1 && spec.coord_a != spec.coord_b)
        return spec;
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::InvalidInput,
       "projection must be 'pca', 'random' or 'i,j' with distinct 1-based "
       "coordinates");
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

using Plane = std::array<std::vector<double>, 2>;

Plane projection_plane(const TropicalCurve& curve, const ProjectionSpec& spec,
                       int n) {
  Plane plane;
  plane[0].assign(n, 0.0);
  plane[1].assign(n, 0.0);
  switch (spec.kind) {
    case ProjectionSpec::Kind::Coords: {
      if (spec.coord_a > n || spec.coord_b > n)
        fail(ErrorKind::InvalidInput, "projection coordinate out of range");
      plane[0][spec.coord_a - 1] = 1.0;
      plane[1][spec.coord_b - 1] = 1.0;
      break;
    }
    case ProjectionSpec::Kind::Random: {
      std::mt19937_64 gen(spec.seed);
      auto unit = [&] { return (gen() >> 11) * (2.0 / 9007199254740992.0) - 1.0; };
      for (int i = 0; i < n; ++i) {
        plane[0][i] = unit();
        plane[1][i] = unit();
      }
      break;
    }
    case ProjectionSpec::Kind::Pca: {
      // Cheap surrogate: project onto the two coordinates of largest
      // variance over the vertex set.
      std::vector<double> mean(n, 0.0), variance(n, 0.0);
      for (const QVector& v : curve.vertices) {
        for (int i = 0; i < n; ++i)
          mean[i] += v[i].convert_to<double>();
      }
      const double count = std::max<size_t>(curve.vertices.size(), 1);
      for (int i = 0; i < n; ++i) mean[i] /= count;
      for (const QVector& v : curve.vertices) {
        for (int i = 0; i < n; ++i) {
          double d = v[i].convert_to<double>() - mean[i];
          variance[i] += d * d;
        }
      }
      int best = 0, second = n > 1 ? 1 : 0;
      if (n > 1 && variance[1] > variance[0]) std::swap(best, second);
      for (int i = 2; i < n; ++i) {
        if (variance[i] > variance[best]) {
          second = best;
          best = i;
        } else if (variance[i] > variance[second]) {
          second = i;
        }
      }
      plane[0][best] = 1.0;
      if (second != best) plane[1][second] = 1.0;
      break;
    }
  }
  return plane;
}

}  // namespace

std::string render_svg(const TropicalCurve& curve, const ProjectionSpec& spec,
                       int width, int height) {
  const int n = curve.vertices.empty() ? 0
                                       : static_cast<int>(curve.vertices[0].size());
  Plane plane = projection_plane(curve, spec, n);
  auto project = [&](const QVector& p) {
    double x = 0, y = 0;
    for (int i = 0; i < n; ++i) {
      double c = p[i].convert_to<double>();
      x += plane[0][i] * c;
      y += plane[1][i] * c;
    }
    return std::pair<double, double>{x, y};
  };

  std::vector<std::pair<double, double>> points;
  points.reserve(curve.vertices.size());
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (size_t i = 0; i < curve.vertices.size(); ++i) {
    auto pt = project(curve.vertices[i]);
    if (i == 0) {
      min_x = max_x = pt.first;
      min_y = max_y = pt.second;
    } else {
      min_x = std::min(min_x, pt.first);
      max_x = std::max(max_x, pt.first);
      min_y = std::min(min_y, pt.second);
      max_y = std::max(max_y, pt.second);
    }
    points.push_back(pt);
  }

  const double margin = 40.0;
  const double stub = 40.0;  // rays drawn at fixed screen length
  double span_x = std::max(max_x - min_x, 1e-9);
  double span_y = std::max(max_y - min_y, 1e-9);
  double scale = std::min((width - 2 * margin) / span_x,
                          (height - 2 * margin) / span_y);
  auto to_screen = [&](std::pair<double, double> p) {
    // SVG y grows downward.
    return std::pair<double, double>{
        margin + (p.first - min_x) * scale,
        height - margin - (p.second - min_y) * scale};
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& e : curve.bounded_edges) {
    auto a = to_screen(points[e.a]);
    auto b = to_screen(points[e.b]);
    svg += "  <line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(a.second) +
           "\" x2=\"" + fmt(b.first) + "\" y2=\"" + fmt(b.second) +
           "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  }

  for (const auto& r : curve.rays) {
    auto a = to_screen(points[r.vertex]);
    double dx = 0, dy = 0;
    for (int i = 0; i < n; ++i) {
      dx += plane[0][i] * r.direction[i];
      dy += plane[1][i] * r.direction[i];
    }
    double len = std::hypot(dx, dy);
    if (len < 1e-12) continue;  // ray projects to a point
    double bx = a.first + stub * dx / len;
    double by = a.second - stub * dy / len;
    svg += "  <line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(a.second) +
           "\" x2=\"" + fmt(bx) + "\" y2=\"" + fmt(by) +
           "\" stroke=\"#999999\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\"/>\n";
  }

  for (const auto& p : points) {
    auto s = to_screen(p);
    svg += "  <circle cx=\"" + fmt(s.first) + "\" cy=\"" + fmt(s.second) +
           "\" r=\"2.5\" fill=\"#10263f\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tropgenus
