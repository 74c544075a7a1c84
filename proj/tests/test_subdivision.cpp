#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <string>

#include "tiler/reference.hpp"
#include "tiler/region.hpp"
#include "tiler/subdivision.hpp"

using namespace tiler;

namespace {

std::string rect_word(int w, int h) {
  return std::string(static_cast<size_t>(w), 'R') + std::string(static_cast<size_t>(h), 'U') +
         std::string(static_cast<size_t>(w), 'L') + std::string(static_cast<size_t>(h), 'D');
}

// Each piece, rasterized into unit half-cells: a unit cell split along both
// diagonals gives four quarter triangles. Squares and triangles are unions
// of such quarters, so coverage can be compared exactly.
struct Quarter {
  int64_t cx, cy;
  int q;  // 0: bottom, 1: right, 2: top, 3: left
  auto operator<=>(const Quarter&) const = default;
};

// The quarter of cell (cx,cy) adjacent to side q has centroid offset; a
// point strictly inside a rotated square tests by |du|,|dv| on the centroid.
void quarters_of_square(const RotatedSquare& s, std::multiset<Quarter>& out) {
  const int64_t h = s.half_diagonal;
  for (int64_t cx = s.center.x - h; cx < s.center.x + h; ++cx) {
    for (int64_t cy = s.center.y - h; cy < s.center.y + h; ++cy) {
      // Quarter centroids in units of 1/6: cell center (6cx+3, 6cy+3) moved 2 toward the side.
      const int64_t ox[4] = {0, 2, 0, -2}, oy[4] = {-2, 0, 2, 0};
      for (int q = 0; q < 4; ++q) {
        const int64_t px = 6 * cx + 3 + ox[q] - 6 * s.center.x;
        const int64_t py = 6 * cy + 3 + oy[q] - 6 * s.center.y;
        if (std::abs(px - py) < 6 * h && std::abs(px + py) < 6 * h) out.insert({cx, cy, q});
      }
    }
  }
}

void quarters_of_triangle(const UnitTriangle& t, std::multiset<Quarter>& out) {
  const CellCoord c = t.cell();
  // The triangle covers the two quarters adjacent to its legs.
  for (const LatticePoint e : {t.a, t.b}) {
    const LatticePoint d = e - t.right_angle;
    const LatticePoint mid2{t.right_angle.x * 2 + d.x, t.right_angle.y * 2 + d.y};
    int q;
    if (mid2.y == 2 * c.cy) {
      q = 0;
    } else if (mid2.x == 2 * c.cx + 2) {
      q = 1;
    } else if (mid2.y == 2 * c.cy + 2) {
      q = 2;
    } else {
      q = 3;
    }
    out.insert({c.cx, c.cy, q});
  }
}

void check_partition(const RegionBoundary& b) {
  const Subdivision s = build_subdivision(b);
  REQUIRE(s.doubled_area() == 2 * b.area());
  std::multiset<Quarter> cover;
  for (const auto& sq : s.squares()) quarters_of_square(sq, cover);
  for (const auto& t : s.triangles()) quarters_of_triangle(t, cover);
  std::multiset<Quarter> expect;
  for (const CellCoord c : region_cells(b)) {
    for (int q = 0; q < 4; ++q) expect.insert({c.cx, c.cy, q});
  }
  CHECK(cover == expect);
}

}  // namespace

TEST_CASE("2x2 square splits into unit triangles only") {
  const RegionBoundary b = parse_boundary(rect_word(2, 2));
  const Subdivision s = build_subdivision(b);
  CHECK(s.squares().empty());
  CHECK(s.triangles().size() == 8);
  CHECK(s.doubled_area() == 8);
  check_partition(b);
}

TEST_CASE("single domino region") {
  const RegionBoundary b = parse_boundary("RRULLD");
  check_partition(b);
}

TEST_CASE("k x k squares contain a large rotated square") {
  for (int m = 3; m <= 7; ++m) {
    const int k = 1 << m;
    const RegionBoundary b = parse_boundary(rect_word(k, k));
    const Subdivision s = build_subdivision(b);
    int64_t largest = 0;
    for (const auto& sq : s.squares()) largest = std::max(largest, sq.half_diagonal);
    CHECK(largest >= k / 8);
    CHECK(s.doubled_area() == 2 * b.area());
    CHECK(static_cast<int64_t>(s.piece_count()) <= 8 * b.perimeter());
    MESSAGE("k=" << k << " pieces=" << s.piece_count() << " p=" << b.perimeter());
  }
}

TEST_CASE("exact partition over every small polyomino") {
  int count = 0;
  enumerate_simply_connected(8, [&](const std::vector<CellCoord>& cells) {
    const auto moves = cells_to_moves(cells);
    REQUIRE(moves);
    check_partition(parse_boundary(*moves));
    ++count;
  });
  CHECK(count > 1000);
}

TEST_CASE("boundary square census stays below the bound") {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const auto cells = random_simply_connected(10 + static_cast<int64_t>(seed % 200), seed);
    const RegionBoundary b = parse_boundary(*cells_to_moves(cells));
    const auto counts = si_census(b);
    REQUIRE(counts.size() >= 2);
    CHECK(counts[1] <= 8);
    for (size_t i = 1; i < counts.size(); ++i) {
      CHECK(counts[i] >= 1);
      CHECK(counts[i] < si_bound(static_cast<int>(i)));
    }
    if (seed % 10 == 0) check_partition(b);
  }
}

TEST_CASE("locate finds the containing leaf") {
  const RegionBoundary b = parse_boundary(rect_word(16, 16));
  const Subdivision s = build_subdivision(b);
  const int32_t id = s.locate(to_uv({8, 8}));
  REQUIRE(id >= 0);
  CHECK(s.nodes()[static_cast<size_t>(id)].status == SquareStatus::Inside);
  CHECK(s.locate(to_uv({100000, 0})) == -1);
}

TEST_CASE("dump lists one line per piece") {
  const RegionBoundary b = parse_boundary(rect_word(8, 4));
  const Subdivision s = build_subdivision(b);
  std::ostringstream os;
  s.dump(os);
  const std::string text = os.str();
  CHECK(static_cast<size_t>(std::count(text.begin(), text.end(), '\n')) == s.piece_count());
}
