#include "tiler/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "tiler/error.hpp"
#include "tiler/generators.hpp"
#include "tiler/reference.hpp"
#include "tiler/solver.hpp"

namespace tiler {

std::string bench_base_word(const std::string& family) {
  if (family == "spiral") return gen_spiral(31);
  if (family == "snake") return gen_snake(31, 8);
  throw TilerError(ErrorCode::InvalidArgument, "bench family must be spiral or snake: " + family);
}

namespace {

using Clock = std::chrono::steady_clock;

BenchRecord run_one(const std::string& family, const RegionBoundary& b, const std::string& algo, int reps) {
  BenchRecord r;
  r.family = family;
  r.algo = algo;
  r.p = static_cast<int64_t>(b.perimeter());
  r.n = b.area();
  std::vector<double> times;
  for (int i = 0; i < std::max(reps, 1); ++i) {
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      if (algo == "fast") {
        const Verdict v = decide_tileable(b);
        ok = v.tileable;
        r.sites = v.sites;
        r.edges = v.edges;
      } else if (algo == "thurston") {
        ok = thurston_full(b).tileable();
      } else if (algo == "matching") {
        ok = matching_decide(region_cells(b));
      } else {
        throw TilerError(ErrorCode::InvalidArgument, "unknown algorithm: " + algo);
      }
    } catch (const TilerError& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      r.verdict = "skipped";
      r.ms = 0;
      return r;
    }
    times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    r.verdict = ok ? "tileable" : "untileable";
  }
  std::sort(times.begin(), times.end());
  r.ms = times[times.size() / 2];
  return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  for (const auto& family : cfg.families) {
    const std::string base = bench_base_word(family);
    const int64_t p0 = static_cast<int64_t>(base.size());
    for (int e = cfg.min_exp; e <= cfg.max_exp; ++e) {
      const int64_t k = (int64_t{1} << e) / p0;
      if (k < 1) continue;
      const RegionBoundary b = parse_boundary(dilate(base, k));
      for (const auto& algo : cfg.algos) out.push_back(run_one(family, b, algo, cfg.reps));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.family, a.p, a.algo) < std::tie(b.family, b.p, b.algo);
  });
  return out;
}

std::vector<ExponentFit> fit_exponents(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>> pts;
  for (const auto& r : records)
    if (r.verdict != "skipped" && r.ms > 0)
      pts[{r.family, r.algo}].push_back({std::log(static_cast<double>(r.p)), std::log(r.ms)});
  std::vector<ExponentFit> fits;
  for (const auto& [key, v] : pts) {
    ExponentFit f{key.first, key.second, 0, static_cast<int>(v.size())};
    if (v.size() >= 2) {
      double sx = 0, sy = 0;
      for (auto [x, y] : v) sx += x, sy += y;
      const double mx = sx / v.size(), my = sy / v.size();
      double sxy = 0, sxx = 0;
      for (auto [x, y] : v) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
      f.exponent = sxx > 0 ? sxy / sxx : 0;
    }
    fits.push_back(f);
  }
  return fits;
}

bool bench_verdicts_agree(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, int64_t>, std::string> seen;
  for (const auto& r : records) {
    if (r.verdict == "skipped") continue;
    auto [it, fresh] = seen.emplace(std::make_pair(r.family, r.p), r.verdict);
    if (!fresh && it->second != r.verdict) return false;
  }
  return true;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "family,p,n,algo,ms,verdict,sites,edges\n";
  char ms[32];
  for (const auto& r : records) {
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    os << r.family << ',' << r.p << ',' << r.n << ',' << r.algo << ',' << ms << ',' << r.verdict << ','
       << r.sites << ',' << r.edges << '\n';
  }
  return os.str();
}

std::string fits_csv(const std::vector<ExponentFit>& fits) {
  std::ostringstream os;
  os << "family,algo,exponent,points\n";
  char e[32];
  for (const auto& f : fits) {
    std::snprintf(e, sizeof e, "%.3f", f.exponent);
    os << f.family << ',' << f.algo << ',' << e << ',' << f.points << '\n';
  }
  return os.str();
}

}  // namespace tiler
