#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiler/lattice.hpp"
#include "tiler/region.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

// Sites: boundary vertices plus every square and triangle vertex, sorted
// lexicographically.
struct SiteSet {
  std::vector<LatticePoint> points;
  std::vector<int32_t> boundary_index;  // index into the boundary loop, or -1

  std::optional<int32_t> index_of(LatticePoint p) const;
  size_t size() const { return points.size(); }
  bool on_boundary(int32_t i) const { return boundary_index[static_cast<size_t>(i)] >= 0; }
};

SiteSet collect_sites(const Subdivision& sub, const RegionBoundary& b);

// Sites on one family of diagonal lines. Family U holds lines x - y = c,
// family V lines x + y = c; each line's sites are sorted by x.
struct DiagonalArray {
  struct Entry {
    int64_t line = 0;
    int64_t x = 0;
    int32_t site = 0;
    bool gap_inside = false;  // open segment to the next entry on the line lies in R
  };
  std::vector<Entry> entries;  // sorted by (line, x)

  // Position of the first entry on `line` with x >= x0 (entries.size() if none).
  size_t lower_bound(int64_t line, int64_t x0) const;
};

struct PairEdge {
  int32_t a = 0, b = 0;  // a < b
  int64_t alpha_ab = 0, alpha_ba = 0;
};

struct ValidPairGraph {
  SiteSet sites;
  DiagonalArray along_u;  // lines x - y = const
  DiagonalArray along_v;  // lines x + y = const
  std::vector<PairEdge> edges;
  std::vector<int32_t> offsets;    // CSR over sites
  std::vector<int32_t> neighbors;

  int degree(int32_t i) const { return offsets[static_cast<size_t>(i) + 1] - offsets[static_cast<size_t>(i)]; }
  int max_degree() const;
};

ValidPairGraph build_edges(SiteSet s, const Subdivision& sub, const RegionBoundary& b);

// Whether the open diagonal step from boundary vertex `idx` in direction
// (dx, dy), |dx| = |dy| = 1, enters the interior of R.
bool diagonal_enters(const RegionBoundary& b, size_t idx, int dx, int dy);

}  // namespace tiler
