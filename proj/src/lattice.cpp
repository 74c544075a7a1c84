#include "tiler/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tiler/error.hpp"

namespace tiler {

Color cell_color(CellCoord c) {
  return floor_mod(c.cx + c.cy, 2) == 0 ? Color::White : Color::Black;
}

int axis_dir_index(LatticePoint step) {
  for (int d = 0; d < 4; ++d) {
    if (kAxisDirs[d] == step) return d;
  }
  return -1;
}

CellCoord left_cell(LatticePoint tail, LatticePoint head) {
  switch (axis_dir_index(head - tail)) {
    case 0: return {tail.x, tail.y};
    case 1: return {tail.x - 1, tail.y};
    case 2: return {tail.x - 1, tail.y - 1};
    case 3: return {tail.x, tail.y - 1};
    default: break;
  }
  throw TilerError(ErrorCode::NotAdjacent,
                   "points (" + std::to_string(tail.x) + "," + std::to_string(tail.y) + ") and (" +
                       std::to_string(head.x) + "," + std::to_string(head.y) +
                       ") are not unit axis neighbors");
}

EdgeDeltas edge_deltas(LatticePoint tail, LatticePoint head) {
  const int step = cell_color(left_cell(tail, head)) == Color::White ? -1 : 1;
  return {step, step - 4 * step};
}

int64_t alpha(LatticePoint x, LatticePoint y) {
  const int64_t i = y.x - x.x;
  const int64_t j = y.y - x.y;
  const int64_t ai = std::llabs(i);
  const int64_t aj = std::llabs(j);
  const int64_t base = 2 * std::max(ai, aj);
  if (floor_mod(i - j, 2) == 0) return base;
  // Odd offsets have |i| != |j|. Horizontal-dominant offsets gain one unit
  // from an even-parity source and lose one from an odd-parity source.
  int64_t sign = ai > aj ? 1 : -1;
  if (floor_mod(x.x + x.y, 2) == 1) sign = -sign;
  return base + sign;
}

bool GeodesicRegion::contains(LatticePoint z) const {
  const int64_t su = source.x - source.y, sv = source.x + source.y;
  const int64_t tu = target.x - target.y, tv = target.x + target.y;
  const int64_t zu = z.x - z.y, zv = z.x + z.y;
  return std::min(su, tu) <= zu && zu <= std::max(su, tu) && std::min(sv, tv) <= zv &&
         zv <= std::max(sv, tv);
}

bool in_geodesic_region(LatticePoint x, LatticePoint y, LatticePoint z) {
  return GeodesicRegion{x, y}.contains(z);
}

GeodesicRegion geodesic_region(LatticePoint x, LatticePoint y) { return {x, y}; }

}  // namespace tiler
