// SVG rendering of a traversed curve: bounded edges as segments, rays as
// dashed stubs of fixed screen length. Exact coordinates are converted to
// doubles only here, at render time.
#pragma once

#include <cstdint>
#include <string>

#include "tropgenus/traversal.hpp"

namespace tropgenus {

struct ProjectionSpec {
  enum class Kind { Coords, Pca, Random };
  Kind kind = Kind::Pca;
  int coord_a = 1, coord_b = 2;  // 1-based coordinate (edge) indices
  uint64_t seed = 0;             // for the random plane
};

// Parses "pca", "random" or "i,j". Throws InvalidInput otherwise.
ProjectionSpec parse_projection(const std::string& text);

std::string render_svg(const TropicalCurve& curve, const ProjectionSpec& spec,
                       int width = 800, int height = 600);

}  // namespace tropgenus
