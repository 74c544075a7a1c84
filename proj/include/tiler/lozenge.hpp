#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiler/solver.hpp"

namespace tiler::lozenge {

// Triangular-lattice point in axial form: i along v1, j along v2 (v2 is v1
// turned by 120 degrees, v3 = -v1 - v2).
struct TriPoint {
  int64_t i = 0, j = 0;
  friend auto operator<=>(const TriPoint&, const TriPoint&) = default;
  TriPoint operator+(TriPoint o) const { return {i + o.i, j + o.j}; }
  TriPoint operator-(TriPoint o) const { return {i - o.i, j - o.j}; }
};

// Normalized coordinates (a, b, c) with min = 0 and p = a v1 + b v2 + c v3.
struct TriCoords {
  int64_t a = 0, b = 0, c = 0;
  friend bool operator==(const TriCoords&, const TriCoords&) = default;
};
TriCoords coords(TriPoint p);
TriPoint from_coords(TriCoords t);

enum class TriColor : uint8_t { Black = 0, Red = 1, Blue = 2 };
TriColor tri_color(TriPoint p);

// Six unit directions in counterclockwise angle order starting at v1:
// v1, -v3, v2, -v1, v3, -v2.
inline constexpr TriPoint kTriDirs[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
// The positive directions v1, v2, v3 as indices into kTriDirs.
inline constexpr int kPlusDir[3] = {0, 2, 4};
int tri_dir_index(TriPoint step);

int64_t tri_alpha(TriPoint x, TriPoint y);
// Shortest path on a patch with +v_k costing 1 and -v_k costing 2.
int64_t tri_alpha_oracle(TriPoint x, TriPoint y);

// Parallelogram x + [0, a] v_k + [0, b] v_l of all geodesic paths from x to y.
struct TriGeodesicRegion {
  TriPoint origin;
  int k = 0, l = 0;  // indices 0..2 into kPlusDir
  int64_t a = 0, b = 0;
  bool contains(TriPoint z) const;
};
TriGeodesicRegion tri_geodesic_region(TriPoint x, TriPoint y);

// Unit triangles: up (i,j),(i+1,j),(i+1,j+1); down (i,j),(i+1,j+1),(i,j+1).
struct UnitTri {
  int64_t i = 0, j = 0;
  bool up = true;
  friend auto operator<=>(const UnitTri&, const UnitTri&) = default;
  std::array<TriPoint, 3> corners() const;
};

class LozengeBoundary {
 public:
  const std::vector<TriPoint>& vertices() const { return vertices_; }
  const std::vector<int>& moves() const { return moves_; }  // indices into kTriDirs
  int64_t perimeter() const { return static_cast<int64_t>(vertices_.size()); }
  int64_t area() const { return area_; }  // unit triangles
  std::optional<size_t> index_of(TriPoint p) const;
  // Bit s set when the unit triangle between directions s and s+1 around
  // vertex idx lies inside the region.
  unsigned inside_sectors(size_t idx) const;
  std::string word() const;

 private:
  friend LozengeBoundary parse_lozenge_moves(const std::vector<int>& moves);
  std::vector<TriPoint> vertices_;
  std::vector<int> moves_;
  std::vector<std::pair<TriPoint, uint32_t>> sorted_;
  int64_t area_ = 0;
};

// Moves as kTriDirs indices. Errors as for square boundaries.
LozengeBoundary parse_lozenge_moves(const std::vector<int>& moves);
// Comma/whitespace separated tokens 1,2,3,-1,-2,-3 meaning +-v1, +-v2, +-v3.
LozengeBoundary parse_lozenge(std::string_view text);
std::string lozenge_token(int dir);

struct LozengeHeight {
  std::vector<int64_t> heights;
  bool valid = false;
};
LozengeHeight lozenge_boundary_height(const LozengeBoundary& b);

// Sorted unit triangles inside the region.
std::vector<UnitTri> region_triangles(const LozengeBoundary& b);

// Boundary of a triangle set whose boundary is one simple loop.
std::optional<std::vector<int>> triangles_to_moves(const std::vector<UnitTri>& tris);

// Perfect matching on up/down adjacency.
bool lozenge_matching_decide(const std::vector<UnitTri>& tris);

// Every polyiamond (translation classes) with 1..max_area triangles whose
// boundary is a simple loop.
void enumerate_polyiamonds(int max_area, const std::function<void(const std::vector<UnitTri>&)>& emit);
std::vector<UnitTri> random_polyiamond(int64_t area, uint64_t seed);

// Equilateral-triangle subdivision: interior pieces by level.
struct TriPiece {
  int64_t i = 0, j = 0, side = 1;
  bool up = true;
  int level = 0;
  std::array<TriPoint, 3> corners() const;
};
struct TriSubdivision {
  std::vector<TriPiece> pieces;
  std::vector<int64_t> cut_counts;  // triangles crossed by the boundary, per level
  int64_t doubled_area() const;     // in unit triangles
};
TriSubdivision build_tri_subdivision(const LozengeBoundary& b);

struct TriArc {
  int32_t from = 0, to = 0;
  int64_t alpha = 0;
};
struct LozengeGraph {
  std::vector<TriPoint> sites;  // sorted
  std::vector<int32_t> boundary_index;
  std::vector<TriArc> arcs;     // directed valid pairs, sorted by (from, to)
  int max_out_degree() const;
};
LozengeGraph build_lozenge_graph(const LozengeBoundary& b, const TriSubdivision& sub);

struct LozengeVerdict {
  bool tileable = false;
  Witness witness = Witness::None;
  TriPoint x, y;  // violated arc x -> y
  int64_t gx = 0, gy = 0, alpha_xy = 0;
  std::vector<int64_t> g;
  int64_t p = 0, n = 0, sites = 0, arcs = 0;
  int max_degree = 0;
};
LozengeVerdict decide_lozenge(const LozengeBoundary& b);
std::string lozenge_verdict_json(const LozengeVerdict& v);

}  // namespace tiler::lozenge
