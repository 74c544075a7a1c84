#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "tiler/error.hpp"
#include "tiler/reference.hpp"
#include "tiler/region.hpp"

using namespace tiler;

namespace {

ErrorCode parse_error(std::string_view word) {
  try {
    parse_boundary(word);
  } catch (const TilerError& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << word);
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("parse simple rectangles") {
  const RegionBoundary r = parse_boundary("R,R,U,L,L,D");
  CHECK(r.perimeter() == 6);
  CHECK(r.area() == 2);
  CHECK(r.vertices().front() == LatticePoint{0, 0});

  const RegionBoundary sq = parse_boundary("RULD");
  CHECK(sq.perimeter() == 4);
  CHECK(sq.area() == 1);
}

TEST_CASE("parse is whitespace and case insensitive and accepts JSON") {
  CHECK(parse_boundary(" r r u\nu l l d d ").word() == "RRUULLDD");
  CHECK(parse_boundary(R"({"moves": "rruulldd", "name": "square"})").area() == 4);
}

TEST_CASE("clockwise input is normalized to counterclockwise") {
  const RegionBoundary r = parse_boundary("UURRDDLL");
  CHECK(r.area() == 4);
  CHECK(r.word() == "RRUULLDD");
  CHECK(r.vertices()[1] == LatticePoint{1, 0});
  for (size_t i = 0; i < r.vertices().size(); ++i) CHECK(r.index_of(r.vertices()[i]) == i);
}

TEST_CASE("parse errors") {
  CHECK(parse_error("RRLL") == ErrorCode::EmptyInterior);
  CHECK(parse_error("RRU") == ErrorCode::NotClosed);
  CHECK(parse_error("") == ErrorCode::EmptyInterior);
  // Two unit squares touching at a corner: pinch at (1,1).
  CHECK(parse_error("RURULDLD") == ErrorCode::SelfIntersecting);
  try {
    parse_boundary("RRXU");
    FAIL("expected parse error");
  } catch (const TilerError& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("index 2") != std::string::npos);
  }
  CHECK(parse_error("{\"name\": 1}") == ErrorCode::Parse);
}

TEST_CASE("boundary height of the 2x2 square") {
  const RegionBoundary r = parse_boundary("RRUULLDD");
  const BoundaryHeight h = boundary_height(r);
  REQUIRE(h.valid);
  const std::map<LatticePoint, int64_t> expected = {
      {{0, 0}, 0}, {{1, 0}, -1}, {{2, 0}, 0}, {{2, 1}, 1},
      {{2, 2}, 0}, {{1, 2}, -1}, {{0, 2}, 0}, {{0, 1}, 1}};
  for (size_t i = 0; i < r.vertices().size(); ++i) CHECK(h.heights[i] == expected.at(r.vertices()[i]));
  // Cross-check against the full-grid heights.
  const FullHeightField f = thurston_full(r);
  for (const auto& [p, v] : expected) CHECK(f.height(p) == v);
}

TEST_CASE("unit square has no valid boundary height") {
  CHECK_FALSE(boundary_height(parse_boundary("RULD")).valid);
}

TEST_CASE("heights agree on a loop walked from another start vertex") {
  // Same 3x2 rectangle, started at (1,0) instead of (0,0) and shifted back.
  const RegionBoundary a = parse_boundary("RRRUULLLDD");
  const RegionBoundary b = parse_boundary("RRUULLLDDR");
  const BoundaryHeight ha = boundary_height(a), hb = boundary_height(b);
  REQUIRE(ha.valid);
  REQUIRE(hb.valid);
  // b's origin sits at a's (1,0); colors flip under the odd shift, so heights
  // agree up to sign and a constant.
  const int64_t offset = ha.heights[1];
  for (size_t i = 0; i < b.vertices().size(); ++i) {
    const LatticePoint pa = b.vertices()[i] + LatticePoint{1, 0};
    const int64_t va = ha.heights[*a.index_of(pa)];
    CHECK(va - offset == -hb.heights[i]);
  }
}

TEST_CASE("tileable regions have a valid boundary height") {
  int checked = 0;
  enumerate_simply_connected(8, [&](const std::vector<CellCoord>& cells) {
    const auto moves = cells_to_moves(cells);
    REQUIRE(moves);
    const RegionBoundary r = parse_boundary(*moves);
    CHECK(r.area() == static_cast<int64_t>(cells.size()));
    if (matching_decide(cells)) {
      CHECK(boundary_height(r).valid);
      ++checked;
    }
  });
  CHECK(checked > 100);
}

TEST_CASE("inside quadrants and cell containment") {
  const RegionBoundary r = parse_boundary("RRUULDLD");  // 2x2 minus the top-left cell
  CHECK(r.area() == 3);
  CHECK(contains_cell(r, {0, 0}));
  CHECK(contains_cell(r, {1, 0}));
  CHECK(contains_cell(r, {1, 1}));
  CHECK_FALSE(contains_cell(r, {0, 1}));
  CHECK_FALSE(contains_cell(r, {2, 0}));
  const auto idx = r.index_of({1, 1});
  REQUIRE(idx);
  // Reflex corner: NE, SW, SE quadrants are inside, NW is not.
  CHECK(r.inside_quadrants(*idx) == 0b1101u);
  CHECK(r.inside_quadrants(0) == 0b0001u);
}
