#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include "tiler/error.hpp"
#include "tiler/oracle.hpp"
#include "tiler/reference.hpp"

using namespace tiler;

namespace {

RegionBoundary from_cells(const std::vector<CellCoord>& cells) { return parse_boundary(*cells_to_moves(cells)); }

std::string rect_word(int w, int h) {
  return std::string(static_cast<size_t>(w), 'R') + std::string(static_cast<size_t>(h), 'U') +
         std::string(static_cast<size_t>(w), 'L') + std::string(static_cast<size_t>(h), 'D');
}

using CellPair = std::pair<std::pair<int64_t, int64_t>, std::pair<int64_t, int64_t>>;

CellPair key(const DominoPlacement& d) {
  std::pair<int64_t, int64_t> a{d.cell.cx, d.cell.cy}, b{d.partner.cx, d.partner.cy};
  return a < b ? CellPair{a, b} : CellPair{b, a};
}

void check_heights(const RegionBoundary& b) {
  const FullHeightField f = thurston_full(b);
  REQUIRE(f.tileable());
  TilingOracle o = TilingOracle::preprocess(b);
  const BoundingBox& box = f.bbox();
  for (int64_t x = box.min_x; x <= box.max_x; ++x) {
    for (int64_t y = box.min_y; y <= box.max_y; ++y) {
      if (!f.contains_vertex({x, y})) continue;
      CHECK_MESSAGE(o.height_at({x, y}) == f.height({x, y}), b.word() << " at " << x << "," << y);
      CHECK(o.last_stats().depth <= o.max_depth());
    }
  }
}

void check_tiling(const RegionBoundary& b) {
  const FullHeightField f = thurston_full(b);
  REQUIRE(f.tileable());
  std::set<CellPair> expect;
  for (const auto& d : extract_max_tiling(f)) expect.insert(key(d));
  TilingOracle o = TilingOracle::preprocess(b);
  std::set<CellPair> got;
  for (const CellCoord c : region_cells(b)) {
    CHECK(o.contains_cell(c));
    got.insert(key(o.domino_at(c)));
  }
  CHECK(got == expect);
  CHECK(got.size() * 2 == static_cast<size_t>(b.area()));
}

}  // namespace

TEST_CASE("single domino") {
  TilingOracle o = TilingOracle::preprocess(parse_boundary("RRULLD"));
  const DominoPlacement d = o.domino_at({0, 0});
  CHECK(d.partner == CellCoord{1, 0});
  CHECK(d.orientation == Orientation::H);
  CHECK_THROWS_AS(o.domino_at({2, 0}), TilerError);
}

TEST_CASE("untileable input is rejected") {
  CHECK_THROWS_AS(TilingOracle::preprocess(parse_boundary("RULD")), TilerError);
}

TEST_CASE("2x2 square needs no refinement") {
  TilingOracle o = TilingOracle::preprocess(parse_boundary(rect_word(2, 2)));
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) o.height_at({x, y});
  }
  CHECK(o.overlay_size() == 0);
}

TEST_CASE("heights match the full field on squares and rectangles") {
  for (int k : {4, 8, 16, 32}) check_heights(parse_boundary(rect_word(k, k)));
  for (int w = 2; w <= 14; w += 3) {
    for (int h = 2; h <= 14; h += 2) check_heights(parse_boundary(rect_word(w, h)));
  }
}

TEST_CASE("heights match the full field on random regions") {
  int done = 0;
  for (uint64_t seed = 1; done < 80; ++seed) {
    const auto cells = random_simply_connected(2 * (10 + static_cast<int64_t>(seed % 150)), seed);
    const RegionBoundary b = from_cells(cells);
    if (!thurston_full(b).tileable()) continue;
    check_heights(b);
    ++done;
  }
}

TEST_CASE("domino queries assemble the maximum tiling") {
  check_tiling(parse_boundary(rect_word(16, 16)));
  check_tiling(parse_boundary(rect_word(10, 7)));
  int done = 0;
  for (uint64_t seed = 500; done < 40; ++seed) {
    const RegionBoundary b = from_cells(random_simply_connected(2 * (10 + static_cast<int64_t>(seed % 150)), seed));
    if (!thurston_full(b).tileable()) continue;
    check_tiling(b);
    ++done;
  }
}

TEST_CASE("queries are idempotent and bounded") {
  TilingOracle o = TilingOracle::preprocess(parse_boundary(rect_word(64, 64)));
  const DominoPlacement first = o.domino_at({31, 30});
  const QueryStats s = o.last_stats();
  CHECK(s.depth <= o.max_depth());
  const double lg = std::log2(static_cast<double>(o.solved().boundary.perimeter()));
  CHECK(static_cast<double>(s.searches) <= 48.0 * lg * lg);
  const size_t grown = o.overlay_size();
  CHECK(o.domino_at({31, 30}) == first);
  CHECK(o.overlay_size() == grown);
  CHECK(o.last_stats().new_points == 0);
  const DominoPlacement back = o.domino_at(first.partner);
  CHECK(back.partner == first.cell);
  o.reset();
  CHECK(o.overlay_size() == 0);
  CHECK(o.domino_at({31, 30}) == first);
}
