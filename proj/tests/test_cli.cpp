#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TILER_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run("check RRUULLDD").rc == 0);
  CHECK(run("check RULD").rc == 1);
  const Run bad = run("check RRXU");
  CHECK(bad.rc == 2);
  CHECK(run("check RRUL").rc == 2);
  CHECK(run("--lattice tri check '1 2 -1 -2'").rc == 0);
  CHECK(run("check --matching RRRRULLLLD").rc == 0);
}

TEST_CASE("query and tile") {
  CHECK(run("query 0 0 --word RRULLD").out == "{\"cell\":[0,0],\"partner\":[1,0],\"orientation\":\"H\"}\n");
  CHECK(run("query 9 9 --word RRULLD").rc == 2);
  CHECK(run("tile RULD").rc == 1);
  for (const char* w : {"RRUULLDD", "RRRRUUULLLLDDD", "RRRUULULLDDD"}) {
    const Run a = run(std::string("tile --via-oracle ") + w), b = run(std::string("tile --via-full ") + w);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
  }
  const std::string aztec = run("gen aztec 5").out;
  CHECK(run("tile --via-oracle " + aztec).out == run("tile --via-full " + aztec).out);
}

TEST_CASE("gen is deterministic") {
  CHECK(run("gen rect 2 2").out == "RRUULLDD\n");
  CHECK(run("gen dilate 2 rect 2 1").out == run("gen rect 4 2").out);
  CHECK(run("--seed 7 gen random 50").out == run("--seed 7 gen random 50").out);
  CHECK(run("gen rect 0 1").rc == 2);
}

TEST_CASE("render is byte-identical across runs") {
  const std::string a = run("render --layers boundary,subdivision,tiling RRRUULULLDDD").out;
  CHECK(a == run("render --layers boundary,subdivision,tiling RRRUULULLDDD").out);
  CHECK(a.find("class=\"domino\"") != std::string::npos);
}

TEST_CASE("bench csv schema") {
  const Run r = run("bench --min-exp 8 --max-exp 8 --reps 1 --algos fast,thurston,matching");
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("family,p,n,algo,ms,verdict,sites,edges\n", 0) == 0);
}
