#pragma once

// Test-only brute-force oracles, independent of the library's fast paths.

#include <set>
#include <vector>

#include "tiler/lattice.hpp"

namespace tiler::testing {

// Every lattice point on some geodesic path from x to y, by explicit
// enumeration of king-move paths whose Chebyshev distance from x grows by one
// per step.
std::set<LatticePoint> enumerate_geodesic_points(LatticePoint x, LatticePoint y);

// Enumerates every geodesic path from x to y (as point sequences).
std::vector<std::vector<LatticePoint>> enumerate_geodesic_paths(LatticePoint x, LatticePoint y);

}  // namespace tiler::testing

#include <functional>

namespace tiler::testing {

// Whether some geodesic king-move path from x to y stays in the closed
// region: axis steps need an adjacent cell of the region, diagonal steps need
// the crossed cell.
bool geodesic_path_in_region(LatticePoint x, LatticePoint y, const std::function<bool(CellCoord)>& cell_in);

// All unordered pairs {x, y} of `sites` (sorted) with a geodesic path in the
// region and no other site on any geodesic between them.
std::vector<std::pair<int32_t, int32_t>> brute_force_valid_pairs(const std::vector<LatticePoint>& sites,
                                                                 const std::function<bool(CellCoord)>& cell_in);

}  // namespace tiler::testing
