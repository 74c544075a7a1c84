#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "tiler/lattice.hpp"
#include "tiler/solver.hpp"

namespace tiler {

struct QueryStats {
  int depth = 0;             // refinement steps taken
  int64_t searches = 0;      // sorted-array and overlay lookups
  int64_t new_points = 0;    // overlay points created
};

// Per-cell access to the maximum tiling. Queries refine interior squares
// lazily; refined points persist across queries until reset().
class TilingOracle {
 public:
  // Throws TilerError(NotTileable) when the region has no tiling.
  static TilingOracle preprocess(RegionBoundary b);

  // Maximum height at a vertex of the closed region.
  int64_t height_at(LatticePoint v);
  DominoPlacement domino_at(CellCoord c);
  bool contains_cell(CellCoord c) const;

  void reset();
  const QueryStats& last_stats() const { return stats_; }
  size_t overlay_size() const { return overlay_.size(); }
  const SolvedRegion& solved() const { return solved_; }
  // Upper bound on refinement steps per query.
  int max_depth() const;

 private:
  explicit TilingOracle(SolvedRegion s) : solved_(std::move(s)) {}

  std::optional<int64_t> known(LatticePoint p);
  // Nearest valued point from interior point v along diagonal (dx, dy).
  std::optional<std::pair<LatticePoint, int64_t>> ray(LatticePoint v, int dx, int dy);
  // Minimum of stored height + alpha over the diagonal rays and unit
  // neighbors of an interior point.
  int64_t local_bound(LatticePoint v);
  void insert(LatticePoint p, int64_t h);
  // Values the new vertices of one refinement of the box [o, o+side]^2 (uv).
  void refine(UV o, int64_t side);

  SolvedRegion solved_;
  std::unordered_map<LatticePoint, int64_t, LatticePointHash> overlay_;
  std::unordered_map<int64_t, std::map<int64_t, int64_t>> overlay_u_;  // line x-y: x -> height
  std::unordered_map<int64_t, std::map<int64_t, int64_t>> overlay_v_;  // line x+y: x -> height
  QueryStats stats_;
};

}  // namespace tiler
