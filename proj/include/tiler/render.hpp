#pragma once

#include <string>
#include <vector>

#include "tiler/lozenge.hpp"
#include "tiler/region.hpp"

namespace tiler {

struct RenderSpec {
  std::vector<std::string> layers{"boundary"};  // boundary, subdivision, heights, tiling
  double scale = 20;
};

std::vector<std::string> parse_layers(const std::string& csv);

// Layers are drawn in the fixed order boundary < subdivision < tiling <
// heights regardless of the order requested. heights and tiling need a
// tileable region.
std::string render_svg(const RegionBoundary& b, const RenderSpec& spec);

// Triangular lattice: boundary and subdivision layers only.
std::string render_lozenge_svg(const lozenge::LozengeBoundary& b, const RenderSpec& spec);

}  // namespace tiler
