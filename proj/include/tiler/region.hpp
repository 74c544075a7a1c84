#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiler/lattice.hpp"

namespace tiler {

enum class Move : char { Right = 'R', Up = 'U', Left = 'L', Down = 'D' };

LatticePoint move_step(Move m);

struct BoundingBox {
  int64_t min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

// A simple closed lattice loop, counterclockwise (interior on the left), with
// the first vertex at the origin.
class RegionBoundary {
 public:
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Move>& moves() const { return moves_; }
  int64_t perimeter() const { return static_cast<int64_t>(vertices_.size()); }
  int64_t area() const { return area_; }
  const BoundingBox& bbox() const { return bbox_; }

  // Index of a boundary vertex, if p is on the boundary. O(log p).
  std::optional<size_t> index_of(LatticePoint p) const;
  bool on_boundary(LatticePoint p) const { return index_of(p).has_value(); }

  // Bit q set iff the cell in quadrant q around boundary vertex i lies in the
  // region. Quadrants: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
  unsigned inside_quadrants(size_t i) const;

  // Direction index (kAxisDirs) of the edge leaving vertex i.
  int out_dir(size_t i) const;

  std::string word() const;
 private:
  friend RegionBoundary parse_boundary(const std::vector<Move>& moves);

  std::vector<LatticePoint> vertices_;
  std::vector<Move> moves_;
  std::vector<std::pair<LatticePoint, size_t>> sorted_;
  int64_t area_ = 0;
  BoundingBox bbox_;
};

// Validates and normalizes a move sequence. Throws TilerError with NotClosed,
// EmptyInterior, or SelfIntersecting.
RegionBoundary parse_boundary(const std::vector<Move>& moves);

// Accepts "RRUULLDD", "R,R,U,...", whitespace, either case, or a JSON object
// {"moves": "...", "name": "..."}. Throws TilerError(Parse) with the offending
// index for bad characters.
std::vector<Move> parse_moves(std::string_view text);
RegionBoundary parse_boundary(std::string_view text);

struct BoundaryHeight {
  std::vector<int64_t> heights;  // aligned with RegionBoundary::vertices()
  bool valid = false;
};

BoundaryHeight boundary_height(const RegionBoundary& b);

// True iff the unit cell c lies inside the region. O(p); meant for tests and
// small-region tooling.
bool contains_cell(const RegionBoundary& b, CellCoord c);

}  // namespace tiler
