#include "tiler/oracle.hpp"

#include <algorithm>
#include <array>

#include "tiler/error.hpp"

namespace tiler {

TilingOracle TilingOracle::preprocess(RegionBoundary b) {
  SolvedRegion s = solve_region(std::move(b));
  if (!s.verdict.tileable) throw TilerError(ErrorCode::NotTileable, "region is not tileable");
  return TilingOracle(std::move(s));
}

int TilingOracle::max_depth() const { return solved_.subdivision.levels() + 1; }

void TilingOracle::reset() {
  overlay_.clear();
  overlay_u_.clear();
  overlay_v_.clear();
  stats_ = {};
}

std::optional<int64_t> TilingOracle::known(LatticePoint p) {
  ++stats_.searches;
  if (const auto i = solved_.graph.sites.index_of(p)) return solved_.verdict.g[static_cast<size_t>(*i)];
  const auto it = overlay_.find(p);
  if (it != overlay_.end()) return it->second;
  return std::nullopt;
}

void TilingOracle::insert(LatticePoint p, int64_t h) {
  overlay_.emplace(p, h);
  overlay_u_[p.x - p.y].emplace(p.x, h);
  overlay_v_[p.x + p.y].emplace(p.x, h);
  ++stats_.new_points;
}

std::optional<std::pair<LatticePoint, int64_t>> TilingOracle::ray(LatticePoint v, int dx, int dy) {
  const bool along_u = dx == dy;
  const int64_t line = along_u ? v.x - v.y : v.x + v.y;
  const DiagonalArray& arr = along_u ? solved_.graph.along_u : solved_.graph.along_v;
  auto& lines = along_u ? overlay_u_ : overlay_v_;

  std::optional<std::pair<int64_t, int64_t>> best;  // x, height
  auto offer = [&](int64_t x, int64_t h) {
    if (!best || std::abs(x - v.x) < std::abs(best->first - v.x)) best = {x, h};
  };

  ++stats_.searches;
  const size_t k = arr.lower_bound(line, dx > 0 ? v.x + 1 : v.x);
  if (dx > 0 && k < arr.entries.size() && arr.entries[k].line == line) {
    offer(arr.entries[k].x, solved_.verdict.g[static_cast<size_t>(arr.entries[k].site)]);
  } else if (dx < 0 && k > 0 && arr.entries[k - 1].line == line) {
    offer(arr.entries[k - 1].x, solved_.verdict.g[static_cast<size_t>(arr.entries[k - 1].site)]);
  }

  const auto ln = lines.find(line);
  if (ln != lines.end()) {
    ++stats_.searches;
    const auto& m = ln->second;
    if (dx > 0) {
      const auto it = m.upper_bound(v.x);
      if (it != m.end()) offer(it->first, it->second);
    } else {
      auto it = m.lower_bound(v.x);
      if (it != m.begin()) {
        --it;
        offer(it->first, it->second);
      }
    }
  }
  if (!best) return std::nullopt;
  const int64_t x = best->first;
  return std::make_pair(LatticePoint{x, along_u ? x - line : line - x}, best->second);
}

int64_t TilingOracle::local_bound(LatticePoint v) {
  std::optional<int64_t> best;
  auto offer = [&](LatticePoint from, int64_t h) {
    const int64_t c = h + alpha(from, v);
    if (!best || c < *best) best = c;
  };
  for (const auto& [dx, dy] : {std::pair{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) {
    if (const auto hit = ray(v, dx, dy)) offer(hit->first, hit->second);
  }
  for (const LatticePoint d : kAxisDirs) {
    if (const auto h = known(v + d)) offer(v + d, *h);
  }
  if (!best) throw TilerError(ErrorCode::InternalInconsistency, "no valued point sees an interior vertex");
  return *best;
}

void TilingOracle::refine(UV o, int64_t side) {
  const int64_t half = side / 2;
  if (side > 2) {
    const std::array<LatticePoint, 4> mids{from_uv({o.u + side, o.v + half}), from_uv({o.u + half, o.v + side}),
                                           from_uv({o.u, o.v + half}), from_uv({o.u + half, o.v})};
    std::array<int64_t, 4> first{};
    std::array<bool, 4> fresh{};
    for (size_t j = 0; j < 4; ++j) {
      const auto k = known(mids[j]);
      fresh[j] = !k;
      first[j] = k ? *k : local_bound(mids[j]);
    }
    // A new midpoint may be fixed through the center by another midpoint;
    // the direct bound from that midpoint is never worse.
    for (size_t j = 0; j < 4; ++j) {
      if (!fresh[j]) continue;
      int64_t h = first[j];
      for (size_t k = 0; k < 4; ++k) {
        if (k != j) h = std::min(h, first[k] + alpha(mids[k], mids[j]));
      }
      insert(mids[j], h);
    }
  }
  const LatticePoint c = from_uv({o.u + half, o.v + half});
  if (!known(c)) insert(c, local_bound(c));
}

int64_t TilingOracle::height_at(LatticePoint v) {
  stats_ = {};
  if (const auto h = known(v)) return *h;
  const Subdivision& sub = solved_.subdivision;
  const UV q = to_uv(v);
  const int32_t leaf = sub.locate(q);
  if (leaf < 0 || sub.nodes()[static_cast<size_t>(leaf)].status != SquareStatus::Inside) {
    throw TilerError(ErrorCode::OutsideRegion, "vertex outside the region");
  }
  const QuadNode& n = sub.nodes()[static_cast<size_t>(leaf)];
  UV o = sub.node_origin(n);
  int64_t side = sub.side_at(n.level);
  while (true) {
    refine(o, side);
    ++stats_.depth;
    if (const auto h = known(v)) return *h;
    if (side <= 2) throw TilerError(ErrorCode::InternalInconsistency, "refinement did not reach the vertex");
    side /= 2;
    if (q.u >= o.u + side) o.u += side;
    if (q.v >= o.v + side) o.v += side;
  }
}

bool TilingOracle::contains_cell(CellCoord c) const {
  // A point strictly inside the lower quarter of the cell, scaled by 4.
  const Subdivision& sub = solved_.subdivision;
  const int32_t leaf = sub.locate_scaled({4 * (c.cx - c.cy) + 1, 4 * (c.cx + c.cy) + 3}, 4);
  if (leaf < 0) return false;
  const QuadNode& n = sub.nodes()[static_cast<size_t>(leaf)];
  if (n.status == SquareStatus::Inside) return true;
  if (n.status != SquareStatus::Boundary || n.first_triangle < 0) return false;
  for (int t = 0; t < n.triangle_count; ++t) {
    const CellCoord tc = sub.triangles()[static_cast<size_t>(n.first_triangle + t)].cell();
    if (tc.cx == c.cx && tc.cy == c.cy) return true;
  }
  return false;
}

DominoPlacement TilingOracle::domino_at(CellCoord c) {
  if (!contains_cell(c)) throw TilerError(ErrorCode::OutsideRegion, "cell outside the region");
  const std::array<LatticePoint, 4> corner{
      LatticePoint{c.cx, c.cy}, {c.cx + 1, c.cy}, {c.cx + 1, c.cy + 1}, {c.cx, c.cy + 1}};
  std::array<int64_t, 4> h{};
  QueryStats total;
  for (size_t i = 0; i < 4; ++i) {
    h[i] = height_at(corner[i]);
    total.depth = std::max(total.depth, stats_.depth);
    total.searches += stats_.searches;
    total.new_points += stats_.new_points;
  }
  stats_ = total;
  // Sides: bottom, right, top, left.
  const std::array<CellCoord, 4> across{
      CellCoord{c.cx, c.cy - 1}, {c.cx + 1, c.cy}, {c.cx, c.cy + 1}, {c.cx - 1, c.cy}};
  int found = -1;
  for (int s = 0; s < 4; ++s) {
    if (std::abs(h[static_cast<size_t>(s)] - h[static_cast<size_t>((s + 1) % 4)]) != 3) continue;
    if (found >= 0) throw TilerError(ErrorCode::InternalInconsistency, "cell has two crossed sides");
    found = s;
  }
  if (found < 0) throw TilerError(ErrorCode::InternalInconsistency, "cell has no crossed side");
  return {c, across[static_cast<size_t>(found)], found % 2 == 1 ? Orientation::H : Orientation::V};
}

}  // namespace tiler
