#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tiler {

struct BenchRecord {
  std::string family;
  int64_t p = 0, n = 0;
  std::string algo;  // fast | thurston | matching
  double ms = 0;     // median wall time; 0 when skipped
  std::string verdict;  // tileable | untileable | skipped
  int64_t sites = 0, edges = 0;
};

struct BenchConfig {
  std::vector<std::string> families{"spiral", "snake"};
  int min_exp = 8, max_exp = 16;  // p = 2^e
  std::vector<std::string> algos{"fast", "thurston"};
  int reps = 5;
};

struct ExponentFit {
  std::string family, algo;
  double exponent = 0;
  int points = 0;
};

// Width-one base shapes of 31 cells (p = 64).
std::string bench_base_word(const std::string& family);

std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

// Least-squares slope of log(ms) against log(p) per (family, algo),
// skipped records excluded.
std::vector<ExponentFit> fit_exponents(const std::vector<BenchRecord>& records);

// Every non-skipped algorithm agrees on each (family, p).
bool bench_verdicts_agree(const std::vector<BenchRecord>& records);

std::string bench_csv(const std::vector<BenchRecord>& records);
std::string fits_csv(const std::vector<ExponentFit>& fits);

}  // namespace tiler
