#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiler/tiler.h"

namespace {

constexpr int kExitTileable = 0, kExitUntileable = 1, kExitInvalid = 2, kExitFailure = 3;

struct Owned {
  char* s = nullptr;
  ~Owned() { tiler_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Options {
  std::string lattice = "square";
  std::string in = "-";
  std::string word;
  uint64_t seed = 1;
  std::string out;
};

bool is_input_error(tiler_status s) {
  return s == TILER_ERR_PARSE || s == TILER_ERR_NOT_CLOSED || s == TILER_ERR_SELF_INTERSECTING ||
         s == TILER_ERR_EMPTY_INTERIOR || s == TILER_ERR_NOT_ADJACENT || s == TILER_ERR_OUTSIDE_REGION ||
         s == TILER_ERR_INVALID_ARGUMENT || s == TILER_ERR_IO;
}

int report(tiler_status s) {
  std::cerr << "error: " << tiler_status_name(s) << ": " << tiler_last_error() << '\n';
  if (s == TILER_ERR_NOT_TILEABLE) return kExitUntileable;
  return is_input_error(s) ? kExitInvalid : kExitFailure;
}

std::string read_input(const Options& o) {
  if (!o.word.empty()) return o.word;
  if (o.in == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(o.in);
  if (!f) throw std::runtime_error("cannot read " + o.in);
  return {std::istreambuf_iterator<char>(f), {}};
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << o.out << '\n';
    return kExitInvalid;
  }
  return 0;
}

bool parse_int(const std::string& s, int64_t& v) {
  try {
    size_t used = 0;
    v = std::stoll(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct Region {
  tiler_region* r = nullptr;
  ~Region() { tiler_region_free(r); }
};

tiler_status load(const Options& o, Region& region) {
  std::string text;
  try {
    text = read_input(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return TILER_ERR_IO;
  }
  return tiler_region_parse(text.c_str(), o.lattice == "tri" ? TILER_LATTICE_TRI : TILER_LATTICE_SQUARE,
                            &region.r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino and lozenge tileability from region boundaries"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--lattice", o.lattice, "square or tri")->check(CLI::IsMember({"square", "tri"}));
  app.add_option("--in", o.in, "boundary word file, - for stdin");
  app.add_option("--seed", o.seed, "generator seed");
  app.add_option("--out", o.out, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "decide tileability; exit 0 tileable, 1 not, 2 invalid input");
  check->add_option("word", o.word, "boundary word (else read --in)");
  bool via_matching = false;
  check->add_flag("--matching", via_matching, "use the perfect-matching reference instead");

  auto* tile = app.add_subcommand("tile", "print the maximum tiling as JSON");
  tile->add_option("word", o.word, "boundary word (else read --in)");
  bool via_full = false, via_oracle = false;
  tile->add_flag("--via-full", via_full, "use the full height field");
  tile->add_flag("--via-oracle", via_oracle, "use per-cell oracle queries (default)");

  auto* query = app.add_subcommand("query", "domino covering one cell");
  std::vector<int64_t> cell;
  query->add_option("cell", cell, "cell coordinates x y")->expected(2)->required();
  query->add_option("--word", o.word, "boundary word (else read --in)");

  auto* gen = app.add_subcommand("gen", "print a boundary word");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family, "rect|aztec|snake|spiral|random|dilate")->required();
  gen->add_option("params", params, "parameters; dilate takes k then a family and its parameters");

  auto* bench = app.add_subcommand("bench", "timing sweep over dilated families");
  std::string families = "spiral,snake", algos = "fast,thurston";
  int min_exp = 8, max_exp = 16, reps = 5;
  std::string fits_out;
  bench->add_option("--families", families, "comma-separated: spiral,snake");
  bench->add_option("--algos", algos, "comma-separated: fast,thurston,matching");
  bench->add_option("--min-exp", min_exp, "smallest p = 2^e");
  bench->add_option("--max-exp", max_exp, "largest p = 2^e");
  bench->add_option("--reps", reps, "runs per instance (median reported)");
  bench->add_option("--fits", fits_out, "exponent CSV file (default stderr)");

  auto* render = app.add_subcommand("render", "layered SVG");
  render->add_option("word", o.word, "boundary word (else read --in)");
  std::string layers = "boundary";
  double scale = 20;
  render->add_option("--layers", layers, "boundary,subdivision,heights,tiling");
  render->add_option("--scale", scale, "pixels per lattice unit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  if (*gen) {
    std::string fam = family;
    std::vector<std::string> rest = params;
    int64_t k = 1;
    if (fam == "dilate") {
      if (rest.size() < 2 || !parse_int(rest[0], k)) {
        std::cerr << "error: usage: gen dilate k family params...\n";
        return kExitInvalid;
      }
      fam = rest[1];
      rest.erase(rest.begin(), rest.begin() + 2);
    }
    std::vector<int64_t> ps(rest.size());
    for (size_t i = 0; i < rest.size(); ++i) {
      if (!parse_int(rest[i], ps[i])) {
        std::cerr << "error: bad parameter " << rest[i] << '\n';
        return kExitInvalid;
      }
    }
    Owned w;
    if (tiler_status s = tiler_generate(fam.c_str(), ps.data(), ps.size(), o.seed, &w.s)) return report(s);
    if (k == 1) return emit(o, w.str());
    Owned d;
    if (tiler_status s = tiler_dilate(w.s, k, &d.s)) return report(s);
    return emit(o, d.str());
  }

  if (*bench) {
    Owned recs, fits;
    int agree = 0;
    if (tiler_status s = tiler_bench(families.c_str(), algos.c_str(), min_exp, max_exp, reps, &recs.s, &fits.s, &agree))
      return report(s);
    if (int rc = emit(o, recs.str())) return rc;
    if (fits_out.empty()) {
      std::cerr << fits.str();
    } else {
      Options fo;
      fo.out = fits_out;
      if (int rc = emit(fo, fits.str())) return rc;
    }
    if (!agree) {
      std::cerr << "error: verdicts differ across algorithms\n";
      return kExitFailure;
    }
    return 0;
  }

  Region region;
  if (tiler_status s = load(o, region)) return report(s);

  if (*check) {
    int ok = 0;
    Owned json;
    tiler_status s = via_matching ? tiler_check_matching(region.r, &ok) : tiler_check(region.r, &ok, &json.s);
    if (s) return report(s);
    if (int rc = emit(o, via_matching ? std::string(ok ? "{\"tileable\":true}" : "{\"tileable\":false}") : json.str()))
      return rc;
    return ok ? kExitTileable : kExitUntileable;
  }
  if (*tile) {
    if (via_full && via_oracle) {
      std::cerr << "error: --via-full and --via-oracle are exclusive\n";
      return kExitInvalid;
    }
    Owned json;
    if (tiler_status s = tiler_tile(region.r, via_full ? 1 : 0, &json.s)) return report(s);
    return emit(o, json.str());
  }
  if (*query) {
    tiler_oracle* oracle = nullptr;
    if (tiler_status s = tiler_oracle_create(region.r, &oracle)) return report(s);
    Owned json;
    tiler_status s = tiler_oracle_query(oracle, cell[0], cell[1], &json.s);
    tiler_oracle_free(oracle);
    if (s) return report(s);
    return emit(o, json.str());
  }
  if (*render) {
    Owned svg;
    if (tiler_status s = tiler_render(region.r, layers.c_str(), scale, &svg.s)) return report(s);
    return emit(o, svg.str());
  }
  return kExitInvalid;
}
