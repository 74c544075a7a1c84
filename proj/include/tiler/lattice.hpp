#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace tiler {

// A vertex of the square lattice Z^2.
struct LatticePoint {
  int64_t x = 0;
  int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
};

// The unit cell with corners (cx, cy) and (cx + 1, cy + 1).
struct CellCoord {
  int64_t cx = 0;
  int64_t cy = 0;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

enum class Color { White, Black };

// Height change across a lattice edge: `step` when the edge is a tile
// boundary, `crossed` when a domino covers it. crossed = step - 4*sign(step).
struct EdgeDeltas {
  int step = 0;
  int crossed = 0;

  int max() const { return step > crossed ? step : crossed; }
  friend bool operator==(const EdgeDeltas&, const EdgeDeltas&) = default;
};

// Lattice points on some geodesic path between source and target. In the
// rotated frame u = x - y, v = x + y this is the lattice part of the
// axis-aligned box spanned by the two endpoints.
struct GeodesicRegion {
  LatticePoint source;
  LatticePoint target;

  bool contains(LatticePoint z) const;
};

inline int64_t chebyshev(LatticePoint a, LatticePoint b) {
  const int64_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int64_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx > dy ? dx : dy;
}

inline int64_t floor_mod(int64_t a, int64_t m) {
  const int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline int64_t floor_div(int64_t a, int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

// White iff cx + cy is even; cell (0,0) is White.
Color cell_color(CellCoord c);

// Throws TilerError(NotAdjacent) unless head is a unit axis step from tail.
EdgeDeltas edge_deltas(LatticePoint tail, LatticePoint head);

// Maximum of h(y) over all plane height functions h with h(x) = 0.
int64_t alpha(LatticePoint x, LatticePoint y);

bool in_geodesic_region(LatticePoint x, LatticePoint y, LatticePoint z);

GeodesicRegion geodesic_region(LatticePoint x, LatticePoint y);

// Cell lying to the left of the directed unit edge tail -> head.
CellCoord left_cell(LatticePoint tail, LatticePoint head);

// The four unit directions, counterclockwise from East.
inline constexpr LatticePoint kAxisDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Index into kAxisDirs of a unit axis step, or -1.
int axis_dir_index(LatticePoint step);

struct LatticePointHash {
  size_t operator()(const LatticePoint& p) const noexcept {
    uint64_t h = static_cast<uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

}  // namespace tiler

namespace tiler {

enum class Orientation { H, V };

// One domino: `cell` and the edge-adjacent `partner` it is paired with.
struct DominoPlacement {
  CellCoord cell;
  CellCoord partner;
  Orientation orientation = Orientation::H;

  friend bool operator==(const DominoPlacement&, const DominoPlacement&) = default;
};

}  // namespace tiler
