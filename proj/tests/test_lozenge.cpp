#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "json.hpp"
#include "tiler/error.hpp"
#include "tiler/lozenge.hpp"

using namespace tiler;
using namespace tiler::lozenge;

namespace {

LozengeBoundary from_tris(const std::vector<UnitTri>& tris) {
  const auto moves = triangles_to_moves(tris);
  REQUIRE(moves);
  return parse_lozenge_moves(*moves);
}

// Geodesic path points by explicit walk: every step is a unit edge and raises
// the coordinate-sum distance from x by one.
std::set<TriPoint> walk_geodesic_points(TriPoint x, TriPoint y) {
  std::set<TriPoint> out;
  const int64_t total = tri_alpha(x, y);
  std::vector<std::vector<TriPoint>> stack{{x}};
  while (!stack.empty()) {
    auto path = std::move(stack.back());
    stack.pop_back();
    const TriPoint cur = path.back();
    if (cur == y) {
      out.insert(path.begin(), path.end());
      continue;
    }
    for (const TriPoint d : kTriDirs) {
      const TriPoint nxt = cur + d;
      if (tri_alpha(x, nxt) != tri_alpha(x, cur) + 1) continue;
      if (tri_alpha(x, nxt) + tri_alpha(nxt, y) > total) continue;
      auto longer = path;
      longer.push_back(nxt);
      stack.push_back(std::move(longer));
    }
  }
  return out;
}

// Directed valid pairs by definition: no other site on any geodesic from x to
// y, and some geodesic runs along edges of the closed region.
std::vector<std::pair<int32_t, int32_t>> brute_force_arcs(const std::vector<TriPoint>& sites,
                                                          const std::set<UnitTri>& tris) {
  auto edge_in = [&](TriPoint a, TriPoint c) {
    const int d = tri_dir_index(c - a);
    for (int s : {d, (d + 5) % 6}) {
      const TriPoint p = a + kTriDirs[s], q = a + kTriDirs[(s + 1) % 6];
      const int64_t mi = std::min({a.i, p.i, q.i}), mj = std::min({a.j, p.j, q.j});
      const bool up = (p == TriPoint{mi + 1, mj}) || (q == TriPoint{mi + 1, mj}) || (a == TriPoint{mi + 1, mj});
      if (tris.count(UnitTri{mi, mj, up})) return true;
    }
    return false;
  };
  std::vector<std::pair<int32_t, int32_t>> out;
  for (size_t s = 0; s < sites.size(); ++s) {
    for (size_t t = 0; t < sites.size(); ++t) {
      if (s == t) continue;
      const TriPoint x = sites[s], y = sites[t];
      const TriGeodesicRegion g = tri_geodesic_region(x, y);
      bool blocked = false;
      for (size_t k = 0; k < sites.size() && !blocked; ++k) {
        if (k != s && k != t) blocked = g.contains(sites[k]);
      }
      if (blocked) continue;
      std::set<TriPoint> reach{x};
      std::vector<TriPoint> stack{x};
      while (!stack.empty()) {
        const TriPoint cur = stack.back();
        stack.pop_back();
        for (int k : kPlusDir) {
          const TriPoint nxt = cur + kTriDirs[k];
          if (!g.contains(nxt) || reach.count(nxt) || !edge_in(cur, nxt)) continue;
          reach.insert(nxt);
          stack.push_back(nxt);
        }
      }
      if (reach.count(y)) out.emplace_back(static_cast<int32_t>(s), static_cast<int32_t>(t));
    }
  }
  return out;
}

void check_arcs(const LozengeBoundary& b) {
  const LozengeGraph g = build_lozenge_graph(b, build_tri_subdivision(b));
  const auto tv = region_triangles(b);
  const auto expect = brute_force_arcs(g.sites, {tv.begin(), tv.end()});
  std::vector<std::pair<int32_t, int32_t>> got;
  for (const auto& a : g.arcs) got.emplace_back(a.from, a.to);
  if (got == expect) return;
  std::string diff;
  auto show = [&](const std::pair<int32_t, int32_t>& a) {
    const TriPoint x = g.sites[static_cast<size_t>(a.first)], y = g.sites[static_cast<size_t>(a.second)];
    return std::to_string(x.i) + "," + std::to_string(x.j) + "->" + std::to_string(y.i) + "," + std::to_string(y.j);
  };
  for (const auto& a : got) {
    if (!std::binary_search(expect.begin(), expect.end(), a)) diff += " extra " + show(a);
  }
  for (const auto& a : expect) {
    if (!std::binary_search(got.begin(), got.end(), a)) diff += " missing " + show(a);
  }
  FAIL_CHECK(b.word() << diff);
}

}  // namespace

TEST_CASE("coordinates and colors") {
  CHECK(coords({0, 0}) == TriCoords{0, 0, 0});
  CHECK(coords({-1, 0}) == TriCoords{0, 1, 1});
  CHECK(coords({2, 3}) == TriCoords{2, 3, 0});
  CHECK(from_coords(coords({-4, 7})) == TriPoint{-4, 7});
  for (int64_t i = -4; i <= 4; ++i) {
    for (int64_t j = -4; j <= 4; ++j) {
      for (const TriPoint d : kTriDirs) CHECK(tri_color({i, j}) != tri_color(TriPoint{i, j} + d));
    }
  }
}

TEST_CASE("alpha matches the shortest-path oracle") {
  for (int64_t i = -6; i <= 6; ++i) {
    for (int64_t j = -6; j <= 6; ++j) {
      for (const TriPoint x : {TriPoint{0, 0}, TriPoint{1, 0}, TriPoint{2, 5}}) {
        const TriPoint y = x + TriPoint{i, j};
        CHECK(tri_alpha(x, y) == tri_alpha_oracle(x, y));
      }
    }
  }
  CHECK(tri_alpha({0, 0}, {1, 0}) == 1);
  CHECK(tri_alpha({1, 0}, {0, 0}) == 2);
  CHECK(tri_alpha({3, 3}, {3, 3}) == 0);
}

TEST_CASE("alpha is additive along geodesics") {
  for (int64_t i = -5; i <= 5; ++i) {
    for (int64_t j = -5; j <= 5; ++j) {
      const TriPoint y{i, j};
      for (const TriPoint z : walk_geodesic_points({0, 0}, y)) {
        CHECK(tri_alpha({0, 0}, z) + tri_alpha(z, y) == tri_alpha({0, 0}, y));
      }
    }
  }
}

TEST_CASE("geodesic region is the walked parallelogram") {
  for (int64_t i = -5; i <= 5; ++i) {
    for (int64_t j = -5; j <= 5; ++j) {
      const TriPoint x{1, -2}, y = x + TriPoint{i, j};
      const auto walked = walk_geodesic_points(x, y);
      const TriGeodesicRegion g = tri_geodesic_region(x, y);
      for (int64_t a = -8; a <= 8; ++a) {
        for (int64_t c = -8; c <= 8; ++c) {
          const TriPoint z = x + TriPoint{a, c};
          CHECK(g.contains(z) == (walked.count(z) > 0));
        }
      }
    }
  }
}

TEST_CASE("parse and boundary heights") {
  const LozengeBoundary tri = parse_lozenge("1,2,3");
  CHECK(tri.area() == 1);
  CHECK_FALSE(lozenge_boundary_height(tri).valid);
  const LozengeBoundary rhomb = parse_lozenge("1 2 -1 -2");
  CHECK(rhomb.area() == 2);
  CHECK(lozenge_boundary_height(rhomb).valid);
  CHECK(parse_lozenge("-2,-1,2,1").area() == 2);
  CHECK_THROWS_AS(parse_lozenge("1,4"), TilerError);
  CHECK_THROWS_AS(parse_lozenge("1,2"), TilerError);
}

TEST_CASE("small verdicts") {
  CHECK(decide_lozenge(parse_lozenge("1,2,-1,-2")).tileable);
  const LozengeVerdict one = decide_lozenge(parse_lozenge("1,2,3"));
  CHECK_FALSE(one.tileable);
  CHECK(one.witness == Witness::InvalidBoundaryHeight);
  const LozengeBoundary hex = parse_lozenge("1,1,-3,-3,2,2,-1,-1,3,3,-2,-2");
  CHECK(hex.area() == 24);
  const LozengeVerdict v = decide_lozenge(hex);
  CHECK(v.tileable);
  CHECK(v.tileable == lozenge_matching_decide(region_triangles(hex)));
  const auto j = nlohmann::json::parse(lozenge_verdict_json(v));
  CHECK(j["tileable"] == true);
  CHECK(j["n"] == 24);
}

TEST_CASE("triangles and boundaries round-trip") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const auto tris = random_polyiamond(20 + static_cast<int64_t>(seed * 7 % 300), seed);
    const LozengeBoundary b = from_tris(tris);
    auto shifted = region_triangles(b);
    CHECK(shifted.size() == tris.size());
    CHECK(triangles_to_moves(shifted) == triangles_to_moves(tris));
    const TriSubdivision sub = build_tri_subdivision(b);
    CHECK(sub.doubled_area() == b.area());
  }
}

TEST_CASE("arcs equal the brute-force valid pairs") {
  enumerate_polyiamonds(8, [&](const std::vector<UnitTri>& tris) { check_arcs(from_tris(tris)); });
  for (uint64_t seed = 1; seed <= 40; ++seed) check_arcs(from_tris(random_polyiamond(10 + static_cast<int64_t>(seed % 90), seed)));
}

TEST_CASE("verdict agrees with matching on every polyiamond up to 12 triangles") {
  int count = 0, tileable = 0, worst = 0;
  enumerate_polyiamonds(12, [&](const std::vector<UnitTri>& tris) {
    const LozengeVerdict v = decide_lozenge(from_tris(tris));
    CHECK(v.tileable == lozenge_matching_decide(tris));
    worst = std::max(worst, v.max_degree);
    ++count;
    tileable += v.tileable;
  });
  CHECK(worst <= 6);
  MESSAGE(count << " regions, " << tileable << " tileable, max degree " << worst);
}

TEST_CASE("verdict agrees with matching on random regions") {
  int worst = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const auto tris = random_polyiamond(2 + static_cast<int64_t>(seed * 13 % 399), seed);
    const LozengeVerdict v = decide_lozenge(from_tris(tris));
    CHECK(v.tileable == lozenge_matching_decide(tris));
    worst = std::max(worst, v.max_degree);
  }
  CHECK(worst <= 6);
  MESSAGE("max degree " << worst);
}
