#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiler/approxgraph.hpp"
#include "tiler/region.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

enum class Witness : uint8_t { None, InvalidBoundaryHeight, ViolatedPair };

struct ViolatedPair {
  LatticePoint x, y;
  int64_t gx = 0, gy = 0;
  int64_t alpha_xy = 0, alpha_yx = 0;
};

struct Verdict {
  bool tileable = false;
  Witness witness = Witness::None;
  ViolatedPair pair;
  std::vector<int64_t> g;  // per site; complete only when tileable
  int64_t p = 0, n = 0, sites = 0, edges = 0;
};

// Maximum height function on the sites, seeded with h on the boundary.
Verdict compute_gmax(const ValidPairGraph& graph, const BoundaryHeight& h);

// Everything the fast pipeline builds, kept for query structures.
struct SolvedRegion {
  RegionBoundary boundary;
  BoundaryHeight height;
  Subdivision subdivision;
  ValidPairGraph graph;
  Verdict verdict;
};

SolvedRegion solve_region(RegionBoundary b);
Verdict decide_tileable(const RegionBoundary& b);

// {"tileable", "witness", "p", "n", "sites", "edges"}
std::string verdict_json(const Verdict& v);

}  // namespace tiler
