#include "tiler/solver.hpp"

#include <limits>
#include "json.hpp"
#include <queue>
#include <tuple>

#include "tiler/error.hpp"

namespace tiler {

namespace {

constexpr int64_t kUnset = std::numeric_limits<int64_t>::min();
constexpr int64_t kInfinity = std::numeric_limits<int64_t>::max();

// Bounds on the directed arc x -> y, looked up from the edge record.
struct Arc {
  int32_t to;
  int64_t out;   // alpha(x, y)
  int64_t back;  // alpha(y, x)
};

std::vector<std::vector<Arc>> arcs_of(const ValidPairGraph& g) {
  std::vector<std::vector<Arc>> arcs(g.sites.size());
  for (const auto& e : g.edges) {
    arcs[static_cast<size_t>(e.a)].push_back({e.b, e.alpha_ab, e.alpha_ba});
    arcs[static_cast<size_t>(e.b)].push_back({e.a, e.alpha_ba, e.alpha_ab});
  }
  return arcs;
}

}  // namespace

Verdict compute_gmax(const ValidPairGraph& graph, const BoundaryHeight& h) {
  Verdict v;
  v.sites = static_cast<int64_t>(graph.sites.size());
  v.edges = static_cast<int64_t>(graph.edges.size());
  if (!h.valid) {
    v.witness = Witness::InvalidBoundaryHeight;
    return v;
  }
  const size_t n = graph.sites.size();
  const auto& pts = graph.sites.points;
  const auto arcs = arcs_of(graph);
  std::vector<int64_t> value(n, kUnset);
  std::vector<int64_t> key(n, kInfinity);

  // Pair check for x against an assigned neighbor: -alpha(y,x) <= g(y)-g(x) <= alpha(x,y).
  auto violated = [&](int32_t x, const Arc& a) {
    const int64_t diff = value[static_cast<size_t>(a.to)] - value[static_cast<size_t>(x)];
    if (diff <= a.out && -diff <= a.back) return false;
    v.witness = Witness::ViolatedPair;
    v.pair = {pts[static_cast<size_t>(x)], pts[static_cast<size_t>(a.to)], value[static_cast<size_t>(x)],
              value[static_cast<size_t>(a.to)], a.out, a.back};
    return true;
  };

  using Item = std::tuple<int64_t, LatticePoint, int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  auto relax_from = [&](int32_t x) {
    for (const Arc& a : arcs[static_cast<size_t>(x)]) {
      const auto y = static_cast<size_t>(a.to);
      if (value[y] != kUnset) continue;
      const int64_t cand = value[static_cast<size_t>(x)] + a.out;
      if (cand < key[y]) {
        key[y] = cand;
        heap.emplace(cand, pts[y], a.to);
      }
    }
  };

  for (size_t i = 0; i < n; ++i) {
    const int32_t bi = graph.sites.boundary_index[i];
    if (bi >= 0) value[i] = h.heights[static_cast<size_t>(bi)];
  }
  // Boundary pairs are fixed by h and never pass through the queue.
  for (const auto& e : graph.edges) {
    if (graph.sites.on_boundary(e.a) && graph.sites.on_boundary(e.b) &&
        violated(e.a, {e.b, e.alpha_ab, e.alpha_ba})) {
      return v;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (graph.sites.on_boundary(static_cast<int32_t>(i))) relax_from(static_cast<int32_t>(i));
  }

  int64_t last = std::numeric_limits<int64_t>::min();
  while (!heap.empty()) {
    const auto [k, pt, x] = heap.top();
    heap.pop();
    const auto xi = static_cast<size_t>(x);
    if (value[xi] != kUnset || k != key[xi]) continue;
    if (k < last) throw TilerError(ErrorCode::InternalInconsistency, "extracted keys decreased");
    last = k;
    value[xi] = k;
    for (const Arc& a : arcs[xi]) {
      if (value[static_cast<size_t>(a.to)] != kUnset && violated(x, a)) return v;
    }
    relax_from(x);
  }
  for (size_t i = 0; i < n; ++i) {
    if (value[i] == kUnset) throw TilerError(ErrorCode::InternalInconsistency, "site unreachable from the boundary");
  }
  v.tileable = true;
  v.g = std::move(value);
  return v;
}

SolvedRegion solve_region(RegionBoundary b) {
  SolvedRegion s{std::move(b), {}, {}, {}, {}};
  s.height = boundary_height(s.boundary);
  s.subdivision = build_subdivision(s.boundary);
  s.graph = build_edges(collect_sites(s.subdivision, s.boundary), s.subdivision, s.boundary);
  s.verdict = compute_gmax(s.graph, s.height);
  s.verdict.p = s.boundary.perimeter();
  s.verdict.n = s.boundary.area();
  return s;
}

Verdict decide_tileable(const RegionBoundary& b) {
  const BoundaryHeight h = boundary_height(b);
  if (!h.valid) {
    Verdict v;
    v.witness = Witness::InvalidBoundaryHeight;
    v.p = b.perimeter();
    v.n = b.area();
    return v;
  }
  return solve_region(b).verdict;
}

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["tileable"] = v.tileable;
  switch (v.witness) {
    case Witness::None: j["witness"] = nullptr; break;
    case Witness::InvalidBoundaryHeight: j["witness"] = {{"kind", "InvalidBoundaryHeight"}}; break;
    case Witness::ViolatedPair:
      j["witness"] = {{"kind", "ViolatedPair"},
                      {"x", {v.pair.x.x, v.pair.x.y}},
                      {"y", {v.pair.y.x, v.pair.y.y}},
                      {"gx", v.pair.gx},
                      {"gy", v.pair.gy},
                      {"alpha_xy", v.pair.alpha_xy},
                      {"alpha_yx", v.pair.alpha_yx}};
      break;
  }
  j["p"] = v.p;
  j["n"] = v.n;
  j["sites"] = v.sites;
  j["edges"] = v.edges;
  return j.dump();
}

}  // namespace tiler
