#pragma once

// Slow, obviously-correct ground truth: Thurston's full-grid height function,
// bipartite matching, the brute-force alpha, and small-region enumeration.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tiler/lattice.hpp"
#include "tiler/region.hpp"

namespace tiler {

inline constexpr int64_t kDefaultFullCap = 1'000'000;
inline constexpr int64_t kDefaultMatchingCap = 100'000;

// Cap from TILER_CAP if set, else `fallback`.
int64_t reference_cap(int64_t fallback);

// All cells of the region, sorted. Scanline over vertical boundary edges.
std::vector<CellCoord> region_cells(const RegionBoundary& b);

class FullHeightField {
 public:
  bool tileable() const { return tileable_; }
  bool contains_vertex(LatticePoint p) const;
  bool contains_cell(CellCoord c) const;
  // h_max at a vertex of the closed region; throws OutsideRegion otherwise.
  int64_t height(LatticePoint p) const;
  const BoundingBox& bbox() const { return box_; }
  int64_t area() const { return area_; }

 private:
  friend FullHeightField thurston_full(const RegionBoundary& b, int64_t cap);

  size_t vidx(LatticePoint p) const {
    return static_cast<size_t>((p.y - box_.min_y) * (width_ + 1) + (p.x - box_.min_x));
  }
  size_t cidx(CellCoord c) const {
    return static_cast<size_t>((c.cy - box_.min_y) * width_ + (c.cx - box_.min_x));
  }

  bool tileable_ = false;
  BoundingBox box_;
  int64_t width_ = 0, height_ = 0, area_ = 0;
  std::vector<uint8_t> cell_in_;
  std::vector<int64_t> h_;  // kNoHeight outside the closed region
};

// Multi-source shortest-path relaxation over every vertex of the closed
// region, seeded by the boundary height. Throws CapExceeded when the area
// exceeds `cap` (0 means reference_cap(kDefaultFullCap)).
FullHeightField thurston_full(const RegionBoundary& b, int64_t cap = 0);

// Dominoes across every edge whose height difference is 3 in absolute value.
std::vector<DominoPlacement> extract_max_tiling(const FullHeightField& f);

// Maximum bipartite matching size (Hopcroft-Karp). adj[l] lists right vertices.
size_t max_bipartite_matching(size_t n_right, const std::vector<std::vector<uint32_t>>& adj,
                              std::vector<int64_t>* match_of_left = nullptr);

// Perfect-matching decision on the cell adjacency graph.
bool matching_decide(const std::vector<CellCoord>& cells, int64_t cap = 0);

// A tiling from a perfect matching, if one exists.
std::optional<std::vector<DominoPlacement>> matching_tiling(const std::vector<CellCoord>& cells,
                                                            int64_t cap = 0);

// Height function of an explicit tiling at every vertex of the closed region,
// anchored at h(0,0) = 0. Keys are vertices; returns empty on inconsistency.
std::vector<std::pair<LatticePoint, int64_t>> tiling_heights(
    const std::vector<CellCoord>& cells, const std::vector<DominoPlacement>& tiling);

// Brute-force alpha: single-source shortest path with per-edge max deltas on a
// box of Chebyshev radius 3r + 4. Throws RadiusExceeded when r > 16.
int64_t alpha_oracle(LatticePoint x, LatticePoint y);

// Boundary word of a polyomino whose boundary is a simple loop (connected,
// no holes, no pinch vertices); nullopt otherwise.
std::optional<std::vector<Move>> cells_to_moves(const std::vector<CellCoord>& cells);

// Every fixed polyomino of area 1..max_area (max_area <= 12) whose boundary is
// a simple loop, in translation-normalized form.
void enumerate_simply_connected(int max_area,
                                const std::function<void(const std::vector<CellCoord>&)>& emit);

// Seeded growth from a single cell, accepting only cells that keep the
// boundary a simple loop. Deterministic for fixed (area, seed).
std::vector<CellCoord> random_simply_connected(int64_t area, uint64_t seed);

// Corpus cache: header line, then one boundary word per line.
void write_corpus(std::ostream& os, const std::vector<std::string>& words, uint64_t seed);
std::vector<std::string> read_corpus(std::istream& is, uint64_t* seed = nullptr);

}  // namespace tiler
