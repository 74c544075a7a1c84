#include "tiler/tiler.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "tiler/bench.hpp"
#include "tiler/error.hpp"
#include "tiler/generators.hpp"
#include "tiler/lozenge.hpp"
#include "tiler/oracle.hpp"
#include "tiler/reference.hpp"
#include "tiler/render.hpp"
#include "tiler/solver.hpp"

struct tiler_region {
  std::variant<tiler::RegionBoundary, tiler::lozenge::LozengeBoundary> boundary;
};

struct tiler_oracle {
  tiler::TilingOracle oracle;
};

namespace {

thread_local std::string g_last_error;

tiler_status fail(tiler_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
tiler_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return TILER_OK;
  } catch (const tiler::TilerError& e) {
    return fail(static_cast<tiler_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TILER_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TILER_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const tiler::RegionBoundary& square_of(const tiler_region* r) {
  if (const auto* b = std::get_if<tiler::RegionBoundary>(&r->boundary)) return *b;
  throw tiler::TilerError(tiler::ErrorCode::InvalidArgument, "operation needs a square-lattice region");
}

// Lower-left cell first.
tiler::DominoPlacement normalized(tiler::DominoPlacement d) {
  if (std::tie(d.partner.cx, d.partner.cy) < std::tie(d.cell.cx, d.cell.cy)) std::swap(d.cell, d.partner);
  return d;
}

nlohmann::ordered_json placement_json(const tiler::DominoPlacement& d) {
  return {{"cell", {d.cell.cx, d.cell.cy}},
          {"partner", {d.partner.cx, d.partner.cy}},
          {"orientation", d.orientation == tiler::Orientation::H ? "H" : "V"}};
}

std::vector<std::string> split_csv(const char* s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

extern "C" {

void tiler_string_free(char* s) { std::free(s); }

const char* tiler_last_error(void) { return g_last_error.c_str(); }

const char* tiler_status_name(tiler_status s) {
  if (s == TILER_OK) return "Ok";
  if (s == TILER_ERR_NULL_ARGUMENT) return "NullArgument";
  if (s > TILER_OK && s < TILER_ERR_NULL_ARGUMENT) return tiler::to_string(static_cast<tiler::ErrorCode>(s - 1));
  return "Unknown";
}

tiler_status tiler_region_parse(const char* text, tiler_lattice lattice, tiler_region** out) {
  if (!text || !out) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (lattice == TILER_LATTICE_SQUARE)
      *out = new tiler_region{tiler::parse_boundary(std::string_view(text))};
    else if (lattice == TILER_LATTICE_TRI)
      *out = new tiler_region{tiler::lozenge::parse_lozenge(std::string_view(text))};
    else
      throw tiler::TilerError(tiler::ErrorCode::InvalidArgument, "unknown lattice");
  });
}

void tiler_region_free(tiler_region* r) { delete r; }

tiler_status tiler_region_info(const tiler_region* r, int64_t* perimeter, int64_t* area) {
  if (!r) return fail(TILER_ERR_NULL_ARGUMENT, "null region");
  return guarded([&] {
    std::visit(
        [&](const auto& b) {
          if (perimeter) *perimeter = static_cast<int64_t>(b.perimeter());
          if (area) *area = static_cast<int64_t>(b.area());
        },
        r->boundary);
  });
}

tiler_status tiler_check(const tiler_region* r, int* tileable, char** verdict_json) {
  if (!r || !tileable) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::string json;
    if (const auto* b = std::get_if<tiler::RegionBoundary>(&r->boundary)) {
      const tiler::Verdict v = tiler::decide_tileable(*b);
      *tileable = v.tileable;
      if (verdict_json) json = tiler::verdict_json(v);
    } else {
      const auto v = tiler::lozenge::decide_lozenge(std::get<tiler::lozenge::LozengeBoundary>(r->boundary));
      *tileable = v.tileable;
      if (verdict_json) json = tiler::lozenge::lozenge_verdict_json(v);
    }
    if (verdict_json) *verdict_json = dup(json);
  });
}

tiler_status tiler_check_matching(const tiler_region* r, int* tileable) {
  if (!r || !tileable) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (const auto* b = std::get_if<tiler::RegionBoundary>(&r->boundary))
      *tileable = tiler::matching_decide(tiler::region_cells(*b));
    else
      *tileable = tiler::lozenge::lozenge_matching_decide(
          tiler::lozenge::region_triangles(std::get<tiler::lozenge::LozengeBoundary>(r->boundary)));
  });
}

tiler_status tiler_tile(const tiler_region* r, int via_full, char** json) {
  if (!r || !json) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const tiler::RegionBoundary& b = square_of(r);
    std::vector<tiler::DominoPlacement> tiles;
    if (via_full) {
      const tiler::FullHeightField f = tiler::thurston_full(b);
      if (!f.tileable()) throw tiler::TilerError(tiler::ErrorCode::NotTileable, "region is not tileable");
      for (const auto& d : tiler::extract_max_tiling(f)) tiles.push_back(normalized(d));
    } else {
      tiler::TilingOracle o = tiler::TilingOracle::preprocess(b);
      for (const auto& c : tiler::region_cells(b)) {
        const tiler::DominoPlacement d = normalized(o.domino_at(c));
        if (d.cell == c) tiles.push_back(d);
      }
    }
    std::sort(tiles.begin(), tiles.end(), [](const auto& a, const auto& b) {
      return std::tie(a.cell.cx, a.cell.cy) < std::tie(b.cell.cx, b.cell.cy);
    });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : tiles) arr.push_back(placement_json(d));
    *json = dup(arr.dump());
  });
}

tiler_status tiler_oracle_create(const tiler_region* r, tiler_oracle** out) {
  if (!r || !out) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new tiler_oracle{tiler::TilingOracle::preprocess(square_of(r))}; });
}

void tiler_oracle_free(tiler_oracle* o) { delete o; }

tiler_status tiler_oracle_query(tiler_oracle* o, int64_t cx, int64_t cy, char** json) {
  if (!o || !json) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *json = dup(placement_json(o->oracle.domino_at({cx, cy})).dump()); });
}

tiler_status tiler_oracle_height(tiler_oracle* o, int64_t x, int64_t y, int64_t* h) {
  if (!o || !h) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *h = o->oracle.height_at({x, y}); });
}

tiler_status tiler_generate(const char* family, const int64_t* params, size_t n_params, uint64_t seed,
                            char** word) {
  if (!family || !word || (n_params && !params)) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *word = dup(tiler::generate(family, std::vector<int64_t>(params, params + n_params), seed));
  });
}

tiler_status tiler_dilate(const char* word, int64_t k, char** out) {
  if (!word || !out) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::string w;
    for (tiler::Move m : tiler::parse_moves(word)) w += static_cast<char>(m);
    *out = dup(tiler::dilate(w, k));
  });
}

tiler_status tiler_bench(const char* families, const char* algos, int min_exp, int max_exp, int reps,
                         char** records_csv, char** fits_csv, int* verdicts_agree) {
  if (!families || !algos || !records_csv) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    tiler::BenchConfig cfg;
    cfg.families = split_csv(families);
    cfg.algos = split_csv(algos);
    cfg.min_exp = min_exp;
    cfg.max_exp = max_exp;
    cfg.reps = reps;
    if (min_exp < 6 || max_exp > 20 || min_exp > max_exp || reps < 1)
      throw tiler::TilerError(tiler::ErrorCode::InvalidArgument, "bench needs 6 <= min_exp <= max_exp <= 20, reps >= 1");
    const auto recs = tiler::run_bench(cfg);
    *records_csv = dup(tiler::bench_csv(recs));
    if (fits_csv) *fits_csv = dup(tiler::fits_csv(tiler::fit_exponents(recs)));
    if (verdicts_agree) *verdicts_agree = tiler::bench_verdicts_agree(recs);
  });
}

tiler_status tiler_render(const tiler_region* r, const char* layers, double scale, char** svg) {
  if (!r || !layers || !svg) return fail(TILER_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    tiler::RenderSpec spec;
    spec.layers = tiler::parse_layers(layers);
    spec.scale = scale;
    if (const auto* b = std::get_if<tiler::RegionBoundary>(&r->boundary))
      *svg = dup(tiler::render_svg(*b, spec));
    else
      *svg = dup(tiler::render_lozenge_svg(std::get<tiler::lozenge::LozengeBoundary>(r->boundary), spec));
  });
}

}  // extern "C"
