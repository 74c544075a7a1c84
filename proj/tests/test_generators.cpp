#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "tiler/bench.hpp"
#include "tiler/error.hpp"
#include "tiler/generators.hpp"
#include "tiler/reference.hpp"
#include "tiler/render.hpp"
#include "tiler/solver.hpp"
#include "tiler/subdivision.hpp"

using namespace tiler;

namespace {

int64_t count_of(const std::string& s, const std::string& needle) {
  int64_t n = 0;
  for (size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rect and dilate words") {
  CHECK(gen_rect(2, 2) == "RRUULLDD");
  CHECK(dilate(gen_rect(2, 1), 2) == gen_rect(4, 2));
  const RegionBoundary b = parse_boundary(dilate(gen_spiral(31), 3));
  CHECK(b.perimeter() == 64 * 3);
  CHECK(b.area() == 31 * 9);
}

TEST_CASE("families have the advertised sizes") {
  for (int64_t k = 1; k <= 6; ++k) {
    const RegionBoundary b = parse_boundary(gen_aztec(k));
    CHECK(b.area() == 2 * k * (k + 1));
    CHECK(b.perimeter() == 8 * k);
  }
  for (int64_t n : {1, 2, 5, 17, 31, 100}) {
    CHECK(parse_boundary(gen_spiral(n)).perimeter() == 2 * n + 2);
    CHECK(parse_boundary(gen_snake(n, 8)).area() == n);
  }
  CHECK(bench_base_word("spiral").size() == 64);
  CHECK(bench_base_word("snake").size() == 64);
}

TEST_CASE("random is deterministic per seed") {
  CHECK(gen_random(50, 7) == gen_random(50, 7));
  CHECK(gen_random(50, 7) != gen_random(50, 8));
  CHECK(parse_boundary(gen_random(50, 7)).area() == 50);
}

TEST_CASE("bad parameters throw") {
  CHECK_THROWS_AS(gen_rect(0, 2), TilerError);
  CHECK_THROWS_AS(generate("rect", {2}, 0), TilerError);
  CHECK_THROWS_AS(generate("hexagon", {2}, 0), TilerError);
  CHECK(generate("rect", {3, 1}, 0) == "RRRULLLD");
}

TEST_CASE("small bench sweep: schema, agreement, skips") {
  BenchConfig cfg;
  cfg.min_exp = 8;
  cfg.max_exp = 10;
  cfg.reps = 1;
  cfg.algos = {"fast", "thurston", "matching"};
  const auto recs = run_bench(cfg);
  CHECK(recs.size() == 2 * 3 * 3);
  CHECK(bench_verdicts_agree(recs));
  for (const auto& r : recs) {
    CHECK(r.n == r.p * r.p * 31 / (64 * 64));
    CHECK(r.verdict == "tileable");
  }
  const std::string csv = bench_csv(recs);
  CHECK(csv.rfind("family,p,n,algo,ms,verdict,sites,edges\n", 0) == 0);
  CHECK(count_of(csv, "\n") == 19);
  CHECK(fit_exponents(recs).size() == 6);
}

TEST_CASE("exponent fit recovers a known slope") {
  std::vector<BenchRecord> recs;
  for (int64_t p : {256, 512, 1024, 2048}) recs.push_back({"x", p, 0, "a", 0.001 * p * p, "tileable", 0, 0});
  const auto fits = fit_exponents(recs);
  REQUIRE(fits.size() == 1);
  CHECK(fits[0].exponent == doctest::Approx(2.0));
}

TEST_CASE("render: dominoes and subdivision pieces") {
  const RegionBoundary sq = parse_boundary("RRUULLDD");
  RenderSpec spec;
  spec.layers = {"tiling"};
  CHECK(count_of(render_svg(sq, spec), "class=\"domino\"") == 2);
  spec.layers = {"subdivision"};
  const RegionBoundary az = parse_boundary(gen_aztec(4));
  CHECK(count_of(render_svg(az, spec), "class=\"piece") ==
        static_cast<int64_t>(build_subdivision(az).piece_count()));
  spec.layers = {"boundary", "subdivision", "tiling", "heights"};
  CHECK(render_svg(az, spec) == render_svg(az, spec));
  CHECK_THROWS_AS(render_svg(parse_boundary("RULD"), spec), TilerError);
  spec.layers = {"colors"};
  CHECK_THROWS_AS(render_svg(sq, spec), TilerError);
}

TEST_CASE("render goldens") {
  struct Sample {
    const char* name;
    std::string word;
    const char* layers;
  };
  const std::vector<Sample> samples{
      {"rect2x2_all", "RRUULLDD", "boundary,subdivision,tiling,heights"},
      {"aztec3_tiling", gen_aztec(3), "boundary,tiling"},
      {"spiral9_subdivision", gen_spiral(9), "boundary,subdivision"},
      {"lshape_heights", "RRRUULULLDDD", "boundary,heights"},
  };
  const bool update = std::getenv("TILER_UPDATE_GOLDEN") != nullptr;
  for (const auto& s : samples) {
    RenderSpec spec;
    spec.layers = parse_layers(s.layers);
    const std::string svg = render_svg(parse_boundary(s.word), spec);
    const std::string path = std::string(TILER_GOLDEN_DIR) + "/" + s.name + ".svg";
    if (update) {
      std::ofstream(path) << svg;
      continue;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK_MESSAGE(ss.str() == svg, s.name);
  }
  RenderSpec spec;
  spec.layers = {"boundary", "subdivision"};
  const std::string tri = render_lozenge_svg(lozenge::parse_lozenge("1 2 -1 -2"), spec);
  CHECK(tri.find("<polygon") != std::string::npos);
}
