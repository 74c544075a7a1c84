#include "tiler/approxgraph.hpp"

#include <algorithm>
#include <tuple>

namespace tiler {

std::optional<int32_t> SiteSet::index_of(LatticePoint p) const {
  const auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return std::nullopt;
  return static_cast<int32_t>(it - points.begin());
}

SiteSet collect_sites(const Subdivision& sub, const RegionBoundary& b) {
  std::vector<LatticePoint> pts(b.vertices().begin(), b.vertices().end());
  for (const auto& sq : sub.squares()) {
    for (const auto& c : sq.corners()) pts.push_back(c);
  }
  for (const auto& t : sub.triangles()) {
    pts.push_back(t.right_angle);
    pts.push_back(t.a);
    pts.push_back(t.b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  SiteSet s;
  s.points = std::move(pts);
  s.boundary_index.assign(s.points.size(), -1);
  for (size_t k = 0; k < b.vertices().size(); ++k) {
    s.boundary_index[static_cast<size_t>(*s.index_of(b.vertices()[k]))] = static_cast<int32_t>(k);
  }
  return s;
}

size_t DiagonalArray::lower_bound(int64_t line, int64_t x0) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(line, x0),
                                   [](const Entry& e, const std::pair<int64_t, int64_t>& key) {
                                     return std::tie(e.line, e.x) < std::tie(key.first, key.second);
                                   });
  return static_cast<size_t>(it - entries.begin());
}

bool diagonal_enters(const RegionBoundary& b, size_t idx, int dx, int dy) {
  int q;
  if (dx > 0) {
    q = dy > 0 ? 0 : 3;
  } else {
    q = dy > 0 ? 1 : 2;
  }
  return (b.inside_quadrants(idx) >> q) & 1u;
}

int ValidPairGraph::max_degree() const {
  int best = 0;
  for (size_t i = 0; i + 1 < offsets.size(); ++i) best = std::max(best, degree(static_cast<int32_t>(i)));
  return best;
}

namespace {

DiagonalArray build_array(const SiteSet& s, const RegionBoundary& b, int dy) {
  DiagonalArray arr;
  arr.entries.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    const LatticePoint p = s.points[i];
    arr.entries.push_back({dy > 0 ? p.x - p.y : p.x + p.y, p.x, static_cast<int32_t>(i), false});
  }
  std::sort(arr.entries.begin(), arr.entries.end(),
            [](const auto& l, const auto& r) { return std::tie(l.line, l.x) < std::tie(r.line, r.x); });
  for (size_t k = 0; k + 1 < arr.entries.size(); ++k) {
    auto& e = arr.entries[k];
    if (arr.entries[k + 1].line != e.line) continue;
    const int32_t bi = s.boundary_index[static_cast<size_t>(e.site)];
    e.gap_inside = bi < 0 || diagonal_enters(b, static_cast<size_t>(bi), 1, dy);
  }
  return arr;
}

}  // namespace

ValidPairGraph build_edges(SiteSet s, const Subdivision& sub, const RegionBoundary& b) {
  ValidPairGraph g;
  g.sites = std::move(s);
  g.along_u = build_array(g.sites, b, +1);
  g.along_v = build_array(g.sites, b, -1);

  std::vector<std::pair<int32_t, int32_t>> pairs;
  auto add = [&](int32_t x, int32_t y) { pairs.emplace_back(std::min(x, y), std::max(x, y)); };
  for (const auto& t : sub.triangles()) {
    const int32_t r = *g.sites.index_of(t.right_angle);
    const int32_t a = *g.sites.index_of(t.a);
    const int32_t c = *g.sites.index_of(t.b);
    add(r, a);
    add(r, c);
    add(a, c);
  }
  for (const DiagonalArray* arr : {&g.along_u, &g.along_v}) {
    const auto& es = arr->entries;
    for (size_t k = 0; k + 1 < es.size(); ++k) {
      if (es[k].gap_inside) add(es[k].site, es[k + 1].site);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  const size_t n = g.sites.size();
  g.edges.reserve(pairs.size());
  std::vector<int32_t> deg(n, 0);
  for (const auto& [x, y] : pairs) {
    const LatticePoint px = g.sites.points[static_cast<size_t>(x)];
    const LatticePoint py = g.sites.points[static_cast<size_t>(y)];
    g.edges.push_back({x, y, alpha(px, py), alpha(py, px)});
    ++deg[static_cast<size_t>(x)];
    ++deg[static_cast<size_t>(y)];
  }
  g.offsets.assign(n + 1, 0);
  for (size_t i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + deg[i];
  g.neighbors.resize(static_cast<size_t>(g.offsets[n]));
  std::vector<int32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& e : g.edges) {
    g.neighbors[static_cast<size_t>(fill[static_cast<size_t>(e.a)]++)] = e.b;
    g.neighbors[static_cast<size_t>(fill[static_cast<size_t>(e.b)]++)] = e.a;
  }
  return g;
}

}  // namespace tiler
