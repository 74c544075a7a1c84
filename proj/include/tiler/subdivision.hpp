#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tiler/lattice.hpp"
#include "tiler/region.hpp"

namespace tiler {

// Rotated frame: u = x - y, v = x + y. Squares with edge slopes +-1 in the
// plane are axis-aligned boxes here, and lattice points are exactly the
// points with u and v of equal parity.
struct UV {
  int64_t u = 0;
  int64_t v = 0;
  friend auto operator<=>(const UV&, const UV&) = default;
};

inline UV to_uv(LatticePoint p) { return {p.x - p.y, p.x + p.y}; }
inline LatticePoint from_uv(UV q) { return {(q.u + q.v) / 2, (q.v - q.u) / 2}; }

struct RotatedSquare {
  LatticePoint center;
  int64_t half_diagonal = 0;  // power of two
  int level = 0;

  // East, north, west, south corners.
  std::array<LatticePoint, 4> corners() const {
    return {{{center.x + half_diagonal, center.y},
             {center.x, center.y + half_diagonal},
             {center.x - half_diagonal, center.y},
             {center.x, center.y - half_diagonal}}};
  }
};

// Half of a unit cell: legs of length 1 meeting at `right_angle`.
struct UnitTriangle {
  LatticePoint right_angle;
  LatticePoint a;
  LatticePoint b;

  CellCoord cell() const {
    return {std::min({right_angle.x, a.x, b.x}), std::min({right_angle.y, a.y, b.y})};
  }
};

enum class SquareStatus : uint8_t { Pending, Boundary, Inside, Outside };

// Quadtree node in the rotated frame. Sides and neighbors are indexed
// 0 = +u, 1 = +v, 2 = -u, 3 = -v; children by du + 2*dv.
struct QuadNode {
  int level = 0;
  int64_t a = 0, b = 0;  // cell index at this level
  SquareStatus status = SquareStatus::Pending;
  std::array<int32_t, 4> child{{-1, -1, -1, -1}};
  std::array<int32_t, 4> nbr{{-1, -1, -1, -1}};  // -1: outside the root square
  int32_t parent = -1;
  int32_t first_triangle = -1;  // final-level boundary squares
  int8_t triangle_count = 0;
};

class Subdivision {
 public:
  const std::vector<RotatedSquare>& squares() const { return squares_; }
  const std::vector<UnitTriangle>& triangles() const { return triangles_; }
  size_t piece_count() const { return squares_.size() + triangles_.size(); }

  // |S_i| for i = 0..levels().
  const std::vector<int64_t>& boundary_counts() const { return boundary_counts_; }
  int levels() const { return levels_; }

  // Rotated-frame geometry of the quadtree.
  int64_t root_side() const { return root_side_; }
  UV root_origin() const { return origin_; }
  int64_t side_at(int level) const { return root_side_ >> level; }
  UV node_origin(const QuadNode& n) const {
    const int64_t s = side_at(n.level);
    return {origin_.u + n.a * s, origin_.v + n.b * s};
  }
  const std::vector<QuadNode>& nodes() const { return nodes_; }
  RotatedSquare square_of(const QuadNode& n) const;

  // Sum of piece areas, doubled (exact).
  int64_t doubled_area() const;

  // Leaf node whose closed square contains q, preferring Inside leaves.
  // Returns -1 if q lies outside the root.
  int32_t locate(UV q) const { return locate_scaled(q, 1); }
  // Same for the point q / scale.
  int32_t locate_scaled(UV q, int64_t scale) const;

  // Debug dump: "SQ level cx cy half" / "TR x0 y0 x1 y1 x2 y2", one per line.
  void dump(std::ostream& os) const;

 private:
  friend Subdivision build_subdivision(const RegionBoundary& b);

  std::vector<QuadNode> nodes_;
  std::vector<RotatedSquare> squares_;
  std::vector<UnitTriangle> triangles_;
  std::vector<int64_t> boundary_counts_;
  UV origin_;
  int64_t root_side_ = 0;
  int levels_ = 0;
};

Subdivision build_subdivision(const RegionBoundary& b);

// Per-level |S_i| counts (level 0 included).
std::vector<int64_t> si_census(const RegionBoundary& b);

// Strict upper bound on |S_i|: 9 * 2^(i-1) (for i >= 1).
int64_t si_bound(int level);

}  // namespace tiler
