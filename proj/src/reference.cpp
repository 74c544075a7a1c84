#include "tiler/reference.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tiler/error.hpp"

namespace tiler {

namespace {

constexpr int64_t kNoHeight = std::numeric_limits<int64_t>::min();
constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

using MinQueue = std::priority_queue<std::pair<int64_t, size_t>, std::vector<std::pair<int64_t, size_t>>,
                                     std::greater<>>;

struct CellHash {
  size_t operator()(const CellCoord& c) const noexcept {
    return LatticePointHash{}(LatticePoint{c.cx, c.cy});
  }
};

}  // namespace

int64_t reference_cap(int64_t fallback) {
  if (const char* env = std::getenv("TILER_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return fallback;
}

std::vector<CellCoord> region_cells(const RegionBoundary& b) {
  const auto& v = b.vertices();
  const auto& box = b.bbox();
  std::vector<std::vector<int64_t>> rows(static_cast<size_t>(box.max_y - box.min_y));
  for (size_t i = 0; i < v.size(); ++i) {
    const LatticePoint a = v[i];
    const LatticePoint e = v[(i + 1) % v.size()];
    if (a.x == e.x) rows[static_cast<size_t>(std::min(a.y, e.y) - box.min_y)].push_back(a.x);
  }
  std::vector<CellCoord> cells;
  cells.reserve(static_cast<size_t>(b.area()));
  for (size_t r = 0; r < rows.size(); ++r) {
    auto& xs = rows[r];
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); k += 2) {
      for (int64_t x = xs[k]; x < xs[k + 1]; ++x) cells.push_back({x, box.min_y + static_cast<int64_t>(r)});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool FullHeightField::contains_cell(CellCoord c) const {
  if (c.cx < box_.min_x || c.cx >= box_.max_x || c.cy < box_.min_y || c.cy >= box_.max_y) return false;
  return cell_in_[cidx(c)] != 0;
}

bool FullHeightField::contains_vertex(LatticePoint p) const {
  if (p.x < box_.min_x || p.x > box_.max_x || p.y < box_.min_y || p.y > box_.max_y) return false;
  return h_[vidx(p)] != kNoHeight;
}

int64_t FullHeightField::height(LatticePoint p) const {
  if (!contains_vertex(p)) {
    throw TilerError(ErrorCode::OutsideRegion, "vertex (" + std::to_string(p.x) + "," +
                                                   std::to_string(p.y) + ") is outside the region");
  }
  return h_[vidx(p)];
}

FullHeightField thurston_full(const RegionBoundary& b, int64_t cap) {
  if (cap <= 0) cap = reference_cap(kDefaultFullCap);
  if (b.area() > cap) {
    throw TilerError(ErrorCode::CapExceeded, "area " + std::to_string(b.area()) +
                                                 " exceeds the reference cap " + std::to_string(cap));
  }
  FullHeightField f;
  f.box_ = b.bbox();
  f.width_ = f.box_.max_x - f.box_.min_x;
  f.height_ = f.box_.max_y - f.box_.min_y;
  if ((f.width_ + 1) * (f.height_ + 1) > 16 * cap + 64) {
    throw TilerError(ErrorCode::CapExceeded, "bounding box too large for the reference grid");
  }
  f.area_ = b.area();
  f.cell_in_.assign(static_cast<size_t>(f.width_ * f.height_), 0);
  for (const CellCoord& c : region_cells(b)) f.cell_in_[f.cidx(c)] = 1;

  const size_t nv = static_cast<size_t>((f.width_ + 1) * (f.height_ + 1));
  std::vector<int64_t> dist(nv, kInf);
  std::vector<uint8_t> in_closure(nv, 0);
  for (int64_t y = f.box_.min_y; y < f.box_.max_y; ++y) {
    for (int64_t x = f.box_.min_x; x < f.box_.max_x; ++x) {
      if (!f.cell_in_[f.cidx({x, y})]) continue;
      for (LatticePoint p : {LatticePoint{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}}) in_closure[f.vidx(p)] = 1;
    }
  }

  // Unit edge in the closed region iff one of its two cells is in the region.
  auto edge_in = [&](LatticePoint a, LatticePoint c) {
    const CellCoord l = left_cell(a, c);
    const CellCoord r = left_cell(c, a);
    return f.contains_cell(l) || f.contains_cell(r);
  };
  auto edge_interior = [&](LatticePoint a, LatticePoint c) {
    return f.contains_cell(left_cell(a, c)) && f.contains_cell(left_cell(c, a));
  };

  const BoundaryHeight bh = boundary_height(b);
  f.h_.assign(nv, kNoHeight);
  if (!bh.valid) {
    f.tileable_ = false;
    for (size_t i = 0; i < b.vertices().size(); ++i) f.h_[f.vidx(b.vertices()[i])] = bh.heights[i];
    return f;
  }

  MinQueue pq;
  for (size_t i = 0; i < b.vertices().size(); ++i) {
    const size_t k = f.vidx(b.vertices()[i]);
    dist[k] = bh.heights[i];
    pq.push({dist[k], k});
  }
  const int64_t row = f.width_ + 1;
  while (!pq.empty()) {
    auto [d, k] = pq.top();
    pq.pop();
    if (d != dist[k]) continue;
    const LatticePoint p{f.box_.min_x + static_cast<int64_t>(k) % row, f.box_.min_y + static_cast<int64_t>(k) / row};
    for (const LatticePoint dir : kAxisDirs) {
      const LatticePoint q = p + dir;
      if (q.x < f.box_.min_x || q.x > f.box_.max_x || q.y < f.box_.min_y || q.y > f.box_.max_y) continue;
      if (!edge_in(p, q)) continue;
      const size_t kq = f.vidx(q);
      const int64_t nd = d + edge_deltas(p, q).max();
      if (nd < dist[kq]) {
        dist[kq] = nd;
        pq.push({nd, kq});
      }
    }
  }

  bool ok = true;
  for (size_t i = 0; i < b.vertices().size() && ok; ++i) {
    if (dist[f.vidx(b.vertices()[i])] != bh.heights[i]) ok = false;
  }
  for (size_t k = 0; k < nv && ok; ++k) {
    if (!in_closure[k]) continue;
    const LatticePoint p{f.box_.min_x + static_cast<int64_t>(k) % row, f.box_.min_y + static_cast<int64_t>(k) / row};
    for (const LatticePoint dir : {kAxisDirs[0], kAxisDirs[1]}) {
      const LatticePoint q = p + dir;
      if (q.x > f.box_.max_x || q.y > f.box_.max_y || !edge_in(p, q)) continue;
      const EdgeDeltas e = edge_deltas(p, q);
      const int64_t diff = dist[f.vidx(q)] - dist[k];
      const bool fine = edge_interior(p, q) ? (diff == e.step || diff == e.crossed) : diff == e.step;
      if (!fine) {
        ok = false;
        break;
      }
    }
  }
  f.tileable_ = ok;
  for (size_t k = 0; k < nv; ++k) {
    if (in_closure[k]) f.h_[k] = dist[k];
  }
  return f;
}

std::vector<DominoPlacement> extract_max_tiling(const FullHeightField& f) {
  std::vector<DominoPlacement> out;
  if (!f.tileable()) return out;
  const auto& box = f.bbox();
  for (int64_t y = box.min_y; y < box.max_y; ++y) {
    for (int64_t x = box.min_x; x < box.max_x; ++x) {
      const CellCoord c{x, y};
      if (!f.contains_cell(c)) continue;
      // Top edge of c: (x,y+1)-(x+1,y+1); right edge: (x+1,y)-(x+1,y+1).
      const CellCoord up{x, y + 1};
      if (f.contains_cell(up) &&
          std::llabs(f.height({x + 1, y + 1}) - f.height({x, y + 1})) == 3) {
        out.push_back({c, up, Orientation::V});
      }
      const CellCoord right{x + 1, y};
      if (f.contains_cell(right) &&
          std::llabs(f.height({x + 1, y + 1}) - f.height({x + 1, y})) == 3) {
        out.push_back({c, right, Orientation::H});
      }
    }
  }
  return out;
}

size_t max_bipartite_matching(size_t n_right, const std::vector<std::vector<uint32_t>>& adj,
                              std::vector<int64_t>* match_of_left) {
  constexpr uint32_t kNil = std::numeric_limits<uint32_t>::max();
  const size_t n_left = adj.size();
  std::vector<uint32_t> pair_l(n_left, kNil), pair_r(n_right, kNil), dist(n_left, 0);
  std::vector<size_t> it(n_left, 0);
  size_t matched = 0;

  auto bfs = [&]() {
    std::queue<uint32_t> q;
    bool found = false;
    for (uint32_t l = 0; l < n_left; ++l) {
      if (pair_l[l] == kNil) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kNil;
      }
    }
    while (!q.empty()) {
      const uint32_t l = q.front();
      q.pop();
      for (uint32_t r : adj[l]) {
        const uint32_t m = pair_r[r];
        if (m == kNil) {
          found = true;
        } else if (dist[m] == kNil) {
          dist[m] = dist[l] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  auto dfs = [&](uint32_t root) {
    std::vector<uint32_t> stack{root};
    while (!stack.empty()) {
      const uint32_t l = stack.back();
      if (it[l] == adj[l].size()) {
        dist[l] = kNil;
        stack.pop_back();
        if (!stack.empty()) ++it[stack.back()];
        continue;
      }
      const uint32_t r = adj[l][it[l]];
      const uint32_t m = pair_r[r];
      if (m == kNil) {
        for (const uint32_t ls : stack) {
          const uint32_t rs = adj[ls][it[ls]];
          pair_r[rs] = ls;
          pair_l[ls] = rs;
        }
        return true;
      }
      if (dist[m] != kNil && dist[m] == dist[l] + 1) {
        stack.push_back(m);
      } else {
        ++it[l];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (uint32_t l = 0; l < n_left; ++l) {
      if (pair_l[l] == kNil && dfs(l)) ++matched;
    }
  }
  if (match_of_left) {
    match_of_left->assign(n_left, -1);
    for (size_t l = 0; l < n_left; ++l) {
      if (pair_l[l] != kNil) (*match_of_left)[l] = pair_l[l];
    }
  }
  return matched;
}

namespace {

struct CellGraph {
  std::vector<CellCoord> white, black;
  std::vector<std::vector<uint32_t>> adj;
};

CellGraph build_cell_graph(const std::vector<CellCoord>& cells) {
  CellGraph g;
  std::unordered_map<CellCoord, uint32_t, CellHash> black_index;
  for (const CellCoord& c : cells) {
    if (cell_color(c) == Color::White) {
      g.white.push_back(c);
    } else {
      black_index.emplace(c, static_cast<uint32_t>(g.black.size()));
      g.black.push_back(c);
    }
  }
  g.adj.resize(g.white.size());
  for (size_t i = 0; i < g.white.size(); ++i) {
    const CellCoord c = g.white[i];
    for (const LatticePoint d : kAxisDirs) {
      auto it = black_index.find({c.cx + d.x, c.cy + d.y});
      if (it != black_index.end()) g.adj[i].push_back(it->second);
    }
  }
  return g;
}

void check_matching_cap(size_t n, int64_t cap) {
  if (cap <= 0) cap = reference_cap(kDefaultMatchingCap);
  if (static_cast<int64_t>(n) > cap) {
    throw TilerError(ErrorCode::CapExceeded, std::to_string(n) + " cells exceed the matching cap " +
                                                 std::to_string(cap));
  }
}

}  // namespace

bool matching_decide(const std::vector<CellCoord>& cells, int64_t cap) {
  check_matching_cap(cells.size(), cap);
  CellGraph g = build_cell_graph(cells);
  if (g.white.size() != g.black.size()) return false;
  return max_bipartite_matching(g.black.size(), g.adj) == g.white.size();
}

std::optional<std::vector<DominoPlacement>> matching_tiling(const std::vector<CellCoord>& cells,
                                                            int64_t cap) {
  check_matching_cap(cells.size(), cap);
  CellGraph g = build_cell_graph(cells);
  if (g.white.size() != g.black.size()) return std::nullopt;
  std::vector<int64_t> match;
  if (max_bipartite_matching(g.black.size(), g.adj, &match) != g.white.size()) return std::nullopt;
  std::vector<DominoPlacement> out;
  for (size_t i = 0; i < g.white.size(); ++i) {
    CellCoord a = g.white[i];
    CellCoord c = g.black[static_cast<size_t>(match[i])];
    if (c < a) std::swap(a, c);
    out.push_back({a, c, a.cy == c.cy ? Orientation::H : Orientation::V});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.cell < r.cell; });
  return out;
}

std::vector<std::pair<LatticePoint, int64_t>> tiling_heights(
    const std::vector<CellCoord>& cells, const std::vector<DominoPlacement>& tiling) {
  std::unordered_set<CellCoord, CellHash> in(cells.begin(), cells.end());
  // Edge key: the two cells it separates, ordered.
  std::set<std::pair<CellCoord, CellCoord>> covered;
  for (const auto& d : tiling) covered.insert(std::minmax(d.cell, d.partner));

  std::unordered_map<LatticePoint, int64_t, LatticePointHash> h;
  if (cells.empty()) return {};
  LatticePoint start{cells.front().cx, cells.front().cy};
  for (const CellCoord& c : cells) start = std::min(start, LatticePoint{c.cx, c.cy});
  h[start] = 0;
  std::vector<LatticePoint> stack{start};
  while (!stack.empty()) {
    const LatticePoint p = stack.back();
    stack.pop_back();
    for (const LatticePoint d : kAxisDirs) {
      const LatticePoint q = p + d;
      const CellCoord l = left_cell(p, q), r = left_cell(q, p);
      const bool lin = in.count(l) != 0, rin = in.count(r) != 0;
      if (!lin && !rin) continue;
      const EdgeDeltas e = edge_deltas(p, q);
      const int64_t delta = (lin && rin && covered.count(std::minmax(l, r))) ? e.crossed : e.step;
      auto it = h.find(q);
      if (it == h.end()) {
        h[q] = h[p] + delta;
        stack.push_back(q);
      } else if (it->second != h[p] + delta) {
        return {};
      }
    }
  }
  std::vector<std::pair<LatticePoint, int64_t>> out(h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

int64_t alpha_oracle(LatticePoint x, LatticePoint y) {
  const int64_t r = chebyshev(x, y);
  if (r > 16) throw TilerError(ErrorCode::RadiusExceeded, "alpha_oracle supports radius <= 16");
  const int64_t box = 3 * r + 4;
  const int64_t side = 2 * box + 1;
  auto idx = [&](LatticePoint p) {
    return static_cast<size_t>((p.y - x.y + box) * side + (p.x - x.x + box));
  };
  std::vector<int64_t> dist(static_cast<size_t>(side * side), kInf);
  MinQueue pq;
  dist[idx(x)] = 0;
  pq.push({0, idx(x)});
  while (!pq.empty()) {
    auto [d, k] = pq.top();
    pq.pop();
    if (d != dist[k]) continue;
    const LatticePoint p{x.x - box + static_cast<int64_t>(k) % side, x.y - box + static_cast<int64_t>(k) / side};
    for (const LatticePoint dir : kAxisDirs) {
      const LatticePoint q = p + dir;
      if (chebyshev(q, x) > box) continue;
      const int64_t nd = d + edge_deltas(p, q).max();
      if (nd < dist[idx(q)]) {
        dist[idx(q)] = nd;
        pq.push({nd, idx(q)});
      }
    }
  }
  return dist[idx(y)];
}

std::optional<std::vector<Move>> cells_to_moves(const std::vector<CellCoord>& cells) {
  if (cells.empty()) return std::nullopt;
  std::unordered_set<CellCoord, CellHash> in(cells.begin(), cells.end());
  std::unordered_map<LatticePoint, LatticePoint, LatticePointHash> next;
  size_t edges = 0;
  for (const CellCoord& c : cells) {
    const LatticePoint corner[4] = {{c.cx, c.cy}, {c.cx + 1, c.cy}, {c.cx + 1, c.cy + 1}, {c.cx, c.cy + 1}};
    const CellCoord across[4] = {{c.cx, c.cy - 1}, {c.cx + 1, c.cy}, {c.cx, c.cy + 1}, {c.cx - 1, c.cy}};
    for (int k = 0; k < 4; ++k) {
      if (in.count(across[k])) continue;
      if (!next.emplace(corner[k], corner[(k + 1) % 4]).second) return std::nullopt;  // pinch
      ++edges;
    }
  }
  LatticePoint start = next.begin()->first;
  for (const auto& [p, q] : next) {
    if (std::pair(p.y, p.x) < std::pair(start.y, start.x)) start = p;
  }
  std::vector<Move> moves;
  LatticePoint p = start;
  do {
    const LatticePoint q = next.at(p);
    switch (axis_dir_index(q - p)) {
      case 0: moves.push_back(Move::Right); break;
      case 1: moves.push_back(Move::Up); break;
      case 2: moves.push_back(Move::Left); break;
      default: moves.push_back(Move::Down); break;
    }
    p = q;
  } while (p != start && moves.size() <= edges);
  if (moves.size() != edges) return std::nullopt;  // holes or several components
  return moves;
}

namespace {

std::vector<CellCoord> normalized(std::vector<CellCoord> cells) {
  int64_t mx = cells.front().cx, my = cells.front().cy;
  for (const auto& c : cells) {
    mx = std::min(mx, c.cx);
    my = std::min(my, c.cy);
  }
  for (auto& c : cells) {
    c.cx -= mx;
    c.cy -= my;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// Adding `c` keeps the boundary a simple loop iff the part of c's boundary
// already in the closed region is one contiguous arc containing an edge.
bool keeps_simple(const std::unordered_set<CellCoord, CellHash>& in, CellCoord c) {
  auto has = [&](int64_t dx, int64_t dy) { return in.count({c.cx + dx, c.cy + dy}) != 0; };
  const bool e = has(1, 0), n = has(0, 1), w = has(-1, 0), s = has(0, -1);
  const bool ne = e || n || has(1, 1), nw = n || w || has(-1, 1);
  const bool sw = w || s || has(-1, -1), se = s || e || has(1, -1);
  const std::array<bool, 8> ring = {e, ne, n, nw, w, sw, s, se};
  int present = 0, runs = 0;
  for (int i = 0; i < 8; ++i) {
    present += ring[i];
    if (ring[i] && !ring[(i + 7) % 8]) ++runs;
  }
  return (e || n || w || s) && present < 8 && runs == 1;
}

}  // namespace

void enumerate_simply_connected(int max_area,
                                const std::function<void(const std::vector<CellCoord>&)>& emit) {
  if (max_area < 1) return;
  if (max_area > 12) throw TilerError(ErrorCode::InvalidArgument, "max_area must be <= 12");
  std::set<std::vector<CellCoord>> level{{CellCoord{0, 0}}};
  for (int area = 1;; ++area) {
    for (const auto& poly : level) {
      if (cells_to_moves(poly)) emit(poly);
    }
    if (area == max_area) break;
    std::set<std::vector<CellCoord>> grown;
    for (const auto& poly : level) {
      std::set<CellCoord> members(poly.begin(), poly.end());
      for (const CellCoord& c : poly) {
        for (const LatticePoint d : kAxisDirs) {
          const CellCoord nb{c.cx + d.x, c.cy + d.y};
          if (members.count(nb)) continue;
          auto next = poly;
          next.push_back(nb);
          grown.insert(normalized(std::move(next)));
        }
      }
    }
    level = std::move(grown);
  }
}

std::vector<CellCoord> random_simply_connected(int64_t area, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::unordered_set<CellCoord, CellHash> in{{0, 0}};
  std::vector<CellCoord> cells{{0, 0}};
  std::vector<CellCoord> frontier;
  auto push_neighbors = [&](CellCoord c) {
    for (const LatticePoint d : kAxisDirs) {
      const CellCoord nb{c.cx + d.x, c.cy + d.y};
      if (!in.count(nb)) frontier.push_back(nb);
    }
  };
  push_neighbors({0, 0});
  while (static_cast<int64_t>(cells.size()) < area && !frontier.empty()) {
    const size_t pick = std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng);
    const CellCoord c = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (in.count(c) || !keeps_simple(in, c)) continue;
    in.insert(c);
    cells.push_back(c);
    push_neighbors(c);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

void write_corpus(std::ostream& os, const std::vector<std::string>& words, uint64_t seed) {
  os << "# tiler-corpus v1 seed=" << seed << "\n";
  for (const auto& w : words) os << w << "\n";
}

std::vector<std::string> read_corpus(std::istream& is, uint64_t* seed) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("seed=");
      if (seed && pos != std::string::npos) *seed = std::stoull(line.substr(pos + 5));
      continue;
    }
    words.push_back(line);
  }
  return words;
}

}  // namespace tiler
