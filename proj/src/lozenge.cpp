#include "tiler/lozenge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "tiler/error.hpp"
#include "tiler/reference.hpp"

namespace tiler::lozenge {

TriCoords coords(TriPoint p) {
  const int64_t c = std::max<int64_t>({0, -p.i, -p.j});
  return {p.i + c, p.j + c, c};
}

TriPoint from_coords(TriCoords t) { return {t.a - t.c, t.b - t.c}; }

TriColor tri_color(TriPoint p) { return static_cast<TriColor>(floor_mod(-(p.i + p.j), 3)); }

int tri_dir_index(TriPoint step) {
  for (int d = 0; d < 6; ++d) {
    if (kTriDirs[d] == step) return d;
  }
  throw TilerError(ErrorCode::NotAdjacent, "points are not lattice neighbors");
}

int64_t tri_alpha(TriPoint x, TriPoint y) {
  const TriCoords t = coords(y - x);
  return t.a + t.b + t.c;
}

int64_t tri_alpha_oracle(TriPoint x, TriPoint y) {
  const TriPoint d = y - x;
  const int64_t r = std::max({std::abs(d.i), std::abs(d.j), std::abs(d.i - d.j)});
  if (r > 16) throw TilerError(ErrorCode::RadiusExceeded, "oracle radius above 16");
  const int64_t box = 2 * r + 4;
  const int64_t w = 2 * box + 1;
  auto idx = [&](TriPoint p) { return static_cast<size_t>((p.j + box) * w + (p.i + box)); };
  std::vector<int64_t> dist(static_cast<size_t>(w * w), INT64_MAX);
  using Item = std::pair<int64_t, TriPoint>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[idx({0, 0})] = 0;
  pq.emplace(0, TriPoint{0, 0});
  while (!pq.empty()) {
    const auto [dcur, p] = pq.top();
    pq.pop();
    if (dcur != dist[idx(p)]) continue;
    for (int k = 0; k < 6; ++k) {
      const TriPoint q = p + kTriDirs[k];
      if (std::abs(q.i) > box || std::abs(q.j) > box) continue;
      const int64_t nd = dcur + (k % 2 == 0 ? 1 : 2);
      if (nd < dist[idx(q)]) {
        dist[idx(q)] = nd;
        pq.emplace(nd, q);
      }
    }
  }
  return dist[idx(d)];
}

bool TriGeodesicRegion::contains(TriPoint z) const {
  const TriPoint vk = kTriDirs[kPlusDir[k]], vl = kTriDirs[kPlusDir[l]];
  const TriPoint d = z - origin;
  const int64_t det = vk.i * vl.j - vk.j * vl.i;
  const int64_t s = (d.i * vl.j - d.j * vl.i) / det;
  const int64_t t = (vk.i * d.j - vk.j * d.i) / det;
  if (s * vk.i + t * vl.i != d.i || s * vk.j + t * vl.j != d.j) return false;
  return s >= 0 && s <= a && t >= 0 && t <= b;
}

TriGeodesicRegion tri_geodesic_region(TriPoint x, TriPoint y) {
  const TriCoords t = coords(y - x);
  TriGeodesicRegion g{x, 0, 1, t.a, t.b};
  if (t.a == 0 && t.b > 0) {
    g = {x, 1, 2, t.b, t.c};
  } else if (t.b == 0 && t.c > 0) {
    g = {x, 2, 0, t.c, t.a};
  }
  return g;
}

std::array<TriPoint, 3> UnitTri::corners() const {
  if (up) return {{{i, j}, {i + 1, j}, {i + 1, j + 1}}};
  return {{{i, j}, {i + 1, j + 1}, {i, j + 1}}};
}

namespace {

UnitTri tri_from_corners(TriPoint a, TriPoint b, TriPoint c) {
  const int64_t mi = std::min({a.i, b.i, c.i}), mj = std::min({a.j, b.j, c.j});
  const TriPoint probe{mi + 1, mj};
  return {mi, mj, a == probe || b == probe || c == probe};
}

// Unit triangle between directions s and s+1 at p.
UnitTri sector_tri(TriPoint p, int s) { return tri_from_corners(p, p + kTriDirs[s], p + kTriDirs[(s + 1) % 6]); }

int64_t cross(TriPoint a, TriPoint b) { return a.i * b.j - a.j * b.i; }

}  // namespace

std::optional<size_t> LozengeBoundary::index_of(TriPoint p) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(p, uint32_t{0}));
  if (it == sorted_.end() || it->first != p) return std::nullopt;
  return it->second;
}

unsigned LozengeBoundary::inside_sectors(size_t idx) const {
  const size_t n = vertices_.size();
  const int out = moves_[idx];
  const int back = (moves_[(idx + n - 1) % n] + 3) % 6;
  unsigned mask = 0;
  for (int s = out; s != back; s = (s + 1) % 6) mask |= 1u << s;
  return mask;
}

std::string LozengeBoundary::word() const {
  std::string out;
  for (size_t k = 0; k < moves_.size(); ++k) {
    if (k) out += ',';
    out += lozenge_token(moves_[k]);
  }
  return out;
}

std::string lozenge_token(int dir) {
  static const char* names[6] = {"1", "-3", "2", "-1", "3", "-2"};
  return names[dir];
}

LozengeBoundary parse_lozenge_moves(const std::vector<int>& moves) {
  if (moves.empty()) throw TilerError(ErrorCode::EmptyInterior, "empty boundary");
  std::vector<TriPoint> verts;
  verts.reserve(moves.size());
  TriPoint cur{0, 0};
  for (int d : moves) {
    verts.push_back(cur);
    cur = cur + kTriDirs[d];
  }
  if (cur != TriPoint{0, 0}) throw TilerError(ErrorCode::NotClosed, "boundary does not return to its start");
  int64_t twice = 0;
  for (size_t k = 0; k < verts.size(); ++k) twice += cross(verts[k], verts[(k + 1) % verts.size()]);
  if (twice == 0) throw TilerError(ErrorCode::EmptyInterior, "boundary encloses no area");

  LozengeBoundary b;
  const size_t n = verts.size();
  if (twice < 0) {
    b.vertices_.resize(n);
    for (size_t k = 0; k < n; ++k) b.vertices_[k] = verts[(n - k) % n];
  } else {
    b.vertices_ = std::move(verts);
  }
  b.moves_.resize(n);
  for (size_t k = 0; k < n; ++k) b.moves_[k] = tri_dir_index(b.vertices_[(k + 1) % n] - b.vertices_[k]);
  b.sorted_.reserve(n);
  for (size_t k = 0; k < n; ++k) b.sorted_.emplace_back(b.vertices_[k], static_cast<uint32_t>(k));
  std::sort(b.sorted_.begin(), b.sorted_.end());
  for (size_t k = 1; k < n; ++k) {
    if (b.sorted_[k].first == b.sorted_[k - 1].first) {
      throw TilerError(ErrorCode::SelfIntersecting, "boundary revisits a vertex");
    }
  }
  b.area_ = std::abs(twice);
  return b;
}

LozengeBoundary parse_lozenge(std::string_view text) {
  std::vector<int> moves;
  size_t k = 0, token = 0;
  while (k < text.size()) {
    const char ch = text[k];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++k;
      continue;
    }
    bool neg = false;
    if (ch == '-' || ch == '+') {
      neg = ch == '-';
      ++k;
    }
    if (k >= text.size() || text[k] < '1' || text[k] > '3') {
      throw TilerError(ErrorCode::Parse, "bad direction token at index " + std::to_string(token));
    }
    const int axis = text[k] - '1';
    ++k;
    if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw TilerError(ErrorCode::Parse, "bad direction token at index " + std::to_string(token));
    }
    const int plus = kPlusDir[axis];
    moves.push_back(neg ? (plus + 3) % 6 : plus);
    ++token;
  }
  return parse_lozenge_moves(moves);
}

LozengeHeight lozenge_boundary_height(const LozengeBoundary& b) {
  LozengeHeight h;
  h.heights.reserve(b.vertices().size());
  int64_t cur = 0;
  for (int d : b.moves()) {
    h.heights.push_back(cur);
    cur += d % 2 == 0 ? 1 : -1;
  }
  h.valid = cur == 0;
  return h;
}

std::vector<UnitTri> region_triangles(const LozengeBoundary& b) {
  // Crossings of each row band j < y < j+1 at mid-height, as 2X with
  // X = 2i - j (odd integers).
  std::map<int64_t, std::vector<int64_t>> rows;
  const auto& vs = b.vertices();
  for (size_t k = 0; k < vs.size(); ++k) {
    TriPoint p = vs[k], q = vs[(k + 1) % vs.size()];
    if (p.j == q.j) continue;
    if (q.j < p.j) std::swap(p, q);
    const int64_t x2 = 4 * p.i - 2 * p.j + (q.i == p.i ? -1 : 1);
    rows[p.j].push_back(x2);
  }
  std::vector<UnitTri> out;
  for (auto& [j, xs] : rows) {
    std::sort(xs.begin(), xs.end());
    for (size_t m = 0; m + 1 < xs.size(); m += 2) {
      for (int64_t c = xs[m] + 1; c < xs[m + 1]; c += 2) {
        if (floor_mod(c + 2 * j, 4) == 0) {
          out.push_back({(c + 2 * j) / 4, j, false});
        } else {
          out.push_back({(c + 2 * j - 2) / 4, j, true});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::array<std::pair<TriPoint, TriPoint>, 3> ccw_edges(const UnitTri& t) {
  const auto c = t.corners();
  return {{{c[0], c[1]}, {c[1], c[2]}, {c[2], c[0]}}};
}

std::array<UnitTri, 3> edge_neighbors(const UnitTri& t) {
  if (t.up) return {{{t.i, t.j - 1, false}, {t.i + 1, t.j, false}, {t.i, t.j, false}}};
  return {{{t.i, t.j + 1, true}, {t.i - 1, t.j, true}, {t.i, t.j, true}}};
}

}  // namespace

std::optional<std::vector<int>> triangles_to_moves(const std::vector<UnitTri>& tris) {
  if (tris.empty()) return std::nullopt;
  std::set<std::pair<TriPoint, TriPoint>> edges;
  for (const auto& t : tris) {
    for (const auto& e : ccw_edges(t)) edges.insert(e);
  }
  std::map<TriPoint, TriPoint> next;
  for (const auto& [a, c] : edges) {
    if (edges.count({c, a})) continue;
    if (!next.emplace(a, c).second) return std::nullopt;
  }
  auto start = next.begin()->first;
  for (const auto& [a, c] : next) {
    if (std::tie(a.j, a.i) < std::tie(start.j, start.i)) start = a;
  }
  std::vector<int> moves;
  TriPoint cur = start;
  do {
    const auto it = next.find(cur);
    if (it == next.end()) return std::nullopt;
    moves.push_back(tri_dir_index(it->second - cur));
    cur = it->second;
  } while (cur != start && moves.size() <= next.size());
  if (moves.size() != next.size()) return std::nullopt;
  return moves;
}

bool lozenge_matching_decide(const std::vector<UnitTri>& tris) {
  std::map<UnitTri, uint32_t> down_id;
  size_t ups = 0;
  for (const auto& t : tris) {
    if (t.up) {
      ++ups;
    } else {
      down_id.emplace(t, static_cast<uint32_t>(down_id.size()));
    }
  }
  if (2 * ups != tris.size()) return false;
  std::vector<std::vector<uint32_t>> adj;
  adj.reserve(ups);
  for (const auto& t : tris) {
    if (!t.up) continue;
    auto& row = adj.emplace_back();
    for (const auto& nb : edge_neighbors(t)) {
      const auto it = down_id.find(nb);
      if (it != down_id.end()) row.push_back(it->second);
    }
  }
  return max_bipartite_matching(down_id.size(), adj) == ups;
}

namespace {

std::vector<UnitTri> normalized(std::vector<UnitTri> tris) {
  int64_t mi = tris[0].i, mj = tris[0].j;
  for (const auto& t : tris) {
    mi = std::min(mi, t.i);
    mj = std::min(mj, t.j);
  }
  for (auto& t : tris) {
    t.i -= mi;
    t.j -= mj;
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

// The twelve triangles sharing a corner with t, in angular order; consecutive
// entries share an edge.
std::vector<UnitTri> corner_ring(const UnitTri& t) {
  const auto cs = t.corners();
  std::set<UnitTri> ring;
  for (const TriPoint c : cs) {
    for (int s = 0; s < 6; ++s) {
      const UnitTri u = sector_tri(c, s);
      if (u != t) ring.insert(u);
    }
  }
  // Cartesian centroids scaled by 6: X = 2i - j, Y = j (times sqrt 3 / 2).
  auto centroid = [](const UnitTri& u) {
    int64_t x = 0, y = 0;
    for (const TriPoint c : u.corners()) {
      x += 2 * c.i - c.j;
      y += c.j;
    }
    return std::pair<double, double>{static_cast<double>(x) / 2.0, static_cast<double>(y) * 0.8660254037844386};
  };
  const auto [cx, cy] = centroid(t);
  std::vector<UnitTri> out(ring.begin(), ring.end());
  std::sort(out.begin(), out.end(), [&](const UnitTri& p, const UnitTri& q) {
    const auto [px, py] = centroid(p);
    const auto [qx, qy] = centroid(q);
    return std::atan2(py - cy, px - cx) < std::atan2(qy - cy, qx - cx);
  });
  return out;
}

bool keeps_simple(const std::set<UnitTri>& shape, const UnitTri& t) {
  bool edge = false;
  for (const auto& nb : edge_neighbors(t)) edge |= shape.count(nb) > 0;
  if (!edge) return false;
  const auto ring = corner_ring(t);
  int present = 0, runs = 0;
  for (size_t k = 0; k < ring.size(); ++k) {
    const bool here = shape.count(ring[k]) > 0;
    const bool before = shape.count(ring[(k + ring.size() - 1) % ring.size()]) > 0;
    present += here;
    runs += here && !before;
  }
  return present < static_cast<int>(ring.size()) && runs == 1;
}

}  // namespace

void enumerate_polyiamonds(int max_area, const std::function<void(const std::vector<UnitTri>&)>& emit) {
  if (max_area < 1) return;
  if (max_area > 14) throw TilerError(ErrorCode::InvalidArgument, "enumeration limited to 14 triangles");
  std::set<std::vector<UnitTri>> level{{UnitTri{0, 0, true}}, {UnitTri{0, 0, false}}};
  for (int area = 1; area <= max_area; ++area) {
    for (const auto& shape : level) {
      if (triangles_to_moves(shape)) emit(shape);
    }
    if (area == max_area) break;
    std::set<std::vector<UnitTri>> grown;
    for (const auto& shape : level) {
      const std::set<UnitTri> have(shape.begin(), shape.end());
      for (const auto& t : shape) {
        for (const auto& nb : edge_neighbors(t)) {
          if (have.count(nb)) continue;
          std::vector<UnitTri> bigger = shape;
          bigger.push_back(nb);
          grown.insert(normalized(std::move(bigger)));
        }
      }
    }
    level = std::move(grown);
  }
}

std::vector<UnitTri> random_polyiamond(int64_t area, uint64_t seed) {
  if (area < 1) throw TilerError(ErrorCode::InvalidArgument, "area must be positive");
  std::mt19937_64 rng(seed);
  std::set<UnitTri> shape{UnitTri{0, 0, true}};
  std::vector<UnitTri> frontier;
  for (const auto& nb : edge_neighbors(UnitTri{0, 0, true})) frontier.push_back(nb);
  while (static_cast<int64_t>(shape.size()) < area && !frontier.empty()) {
    std::uniform_int_distribution<size_t> pick(0, frontier.size() - 1);
    const size_t k = pick(rng);
    const UnitTri t = frontier[k];
    frontier[k] = frontier.back();
    frontier.pop_back();
    if (shape.count(t) || !keeps_simple(shape, t)) continue;
    shape.insert(t);
    for (const auto& nb : edge_neighbors(t)) {
      if (!shape.count(nb)) frontier.push_back(nb);
    }
    // Rejected cells may become acceptable once the shape grows around them.
    for (const auto& u : corner_ring(t)) {
      if (!shape.count(u)) frontier.push_back(u);
    }
  }
  return {shape.begin(), shape.end()};
}

std::array<TriPoint, 3> TriPiece::corners() const {
  if (up) return {{{i, j}, {i + side, j}, {i + side, j + side}}};
  return {{{i, j}, {i + side, j + side}, {i, j + side}}};
}

int64_t TriSubdivision::doubled_area() const {
  int64_t total = 0;
  for (const auto& p : pieces) total += p.side * p.side;
  return total;
}

namespace {

// Even-odd test for many points: per row band, boundary crossings sorted
// left to right. Points are given scaled by 3 (3X, 3Y) with X = 2i - j and
// never at integer height.
class CrossingIndex {
 public:
  explicit CrossingIndex(const LozengeBoundary& b) {
    const auto& vs = b.vertices();
    for (size_t k = 0; k < vs.size(); ++k) {
      TriPoint p = vs[k], q = vs[(k + 1) % vs.size()];
      if (p.j == q.j) continue;
      if (q.j < p.j) std::swap(p, q);
      rows_[p.j].push_back({2 * p.i - p.j, q.i == p.i ? -1 : 1});
    }
    for (auto& [r, es] : rows_) {
      std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& c) {
        return 2 * a.x0 + a.slope < 2 * c.x0 + c.slope;
      });
    }
  }

  bool inside(int64_t x3, int64_t y3) const {
    const int64_t r = floor_div(y3, 3);
    const auto it = rows_.find(r);
    if (it == rows_.end()) return false;
    const auto& es = it->second;
    // 3 * crossing X at this height.
    auto at = [&](const Edge& e) { return 3 * e.x0 + e.slope * (y3 - 3 * r); };
    const auto first_right =
        std::partition_point(es.begin(), es.end(), [&](const Edge& e) { return at(e) < x3; });
    return (es.end() - first_right) % 2 == 1;
  }

 private:
  struct Edge {
    int64_t x0;  // X at the lower endpoint
    int slope;   // dX per unit height
  };
  std::map<int64_t, std::vector<Edge>> rows_;
};

struct LevelTri {
  int64_t i, j;
  bool up;
};

}  // namespace

TriSubdivision build_tri_subdivision(const LozengeBoundary& b) {
  const auto& vs = b.vertices();
  int64_t j0 = vs[0].j, d0 = vs[0].i - vs[0].j, imax = vs[0].i;
  for (const auto& v : vs) {
    j0 = std::min(j0, v.j);
    d0 = std::min(d0, v.i - v.j);
    imax = std::max(imax, v.i);
  }
  const int64_t i0 = j0 + d0;
  int64_t side = 2;
  while (side < imax - i0) side *= 2;

  const CrossingIndex index(b);
  TriSubdivision sub;
  std::vector<LevelTri> candidates{{i0, j0, true}};
  for (int level = 0; !candidates.empty(); ++level, side /= 2) {
    std::set<std::tuple<int64_t, int64_t, bool>> cut;
    if (side >= 2) {
      for (size_t k = 0; k < vs.size(); ++k) {
        const TriPoint m = vs[k] + vs[(k + 1) % vs.size()];
        const int64_t fi = m.i - 2 * i0, fj = m.j - 2 * j0;
        const int64_t a = floor_div(fi, 2 * side), c = floor_div(fj, 2 * side);
        const int64_t ri = fi - 2 * side * a, rj = fj - 2 * side * c;
        if (ri == 0 || rj == 0 || ri == rj) continue;
        cut.emplace(i0 + a * side, j0 + c * side, ri > rj);
      }
    }
    sub.cut_counts.push_back(0);
    std::vector<LevelTri> next;
    const int64_t h = side / 2;
    for (const auto& t : candidates) {
      if (cut.count({t.i, t.j, t.up})) {
        ++sub.cut_counts.back();
        if (t.up) {
          next.insert(next.end(), {{t.i, t.j, true}, {t.i + h, t.j, true}, {t.i + h, t.j + h, true}, {t.i + h, t.j, false}});
        } else {
          next.insert(next.end(), {{t.i, t.j, false}, {t.i + h, t.j + h, false}, {t.i, t.j + h, false}, {t.i, t.j + h, true}});
        }
        continue;
      }
      const int64_t x3 = t.up ? 6 * t.i - 3 * t.j + 3 * side : 6 * t.i - 3 * t.j;
      const int64_t y3 = t.up ? 3 * t.j + side : 3 * t.j + 2 * side;
      if (index.inside(x3, y3)) sub.pieces.push_back({t.i, t.j, side, t.up, level});
    }
    candidates = std::move(next);
  }
  return sub;
}

int LozengeGraph::max_out_degree() const {
  int best = 0, run = 0;
  for (size_t k = 0; k < arcs.size(); ++k) {
    run = (k > 0 && arcs[k].from == arcs[k - 1].from) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

namespace {

// Sites on the lines of one direction family, sorted by (line, position).
// Family k runs along kPlusDir[k]: v1 lines have fixed j, v2 lines fixed i,
// v3 lines fixed i - j; position grows along the direction.
struct LineIndex {
  int k;
  std::vector<std::tuple<int64_t, int64_t, int32_t>> entries;

  static int64_t line(int k, TriPoint p) { return k == 0 ? p.j : k == 1 ? p.i : p.i - p.j; }
  static int64_t pos(int k, TriPoint p) { return k == 0 ? p.i : k == 1 ? p.j : -p.i; }

  LineIndex(int fam, const std::vector<TriPoint>& sites) : k(fam) {
    entries.reserve(sites.size());
    for (size_t s = 0; s < sites.size(); ++s) {
      entries.emplace_back(line(k, sites[s]), pos(k, sites[s]), static_cast<int32_t>(s));
    }
    std::sort(entries.begin(), entries.end());
  }

  // First site on p's line at position >= pos(p) + skip, with its distance.
  std::optional<std::pair<int32_t, int64_t>> first_from(TriPoint p, int64_t skip) const {
    const int64_t ln = line(k, p), at = pos(k, p) + skip;
    const auto it = std::lower_bound(entries.begin(), entries.end(), std::make_tuple(ln, at, INT32_MIN));
    if (it == entries.end() || std::get<0>(*it) != ln) return std::nullopt;
    return std::make_pair(std::get<2>(*it), std::get<1>(*it) - pos(k, p));
  }

  int64_t min_line() const { return std::get<0>(entries.front()); }
  int64_t max_line() const { return std::get<0>(entries.back()); }
};

}  // namespace

LozengeGraph build_lozenge_graph(const LozengeBoundary& b, const TriSubdivision& sub) {
  LozengeGraph g;
  g.sites.assign(b.vertices().begin(), b.vertices().end());
  for (const auto& piece : sub.pieces) {
    for (const TriPoint c : piece.corners()) g.sites.push_back(c);
  }
  std::sort(g.sites.begin(), g.sites.end());
  g.sites.erase(std::unique(g.sites.begin(), g.sites.end()), g.sites.end());
  g.boundary_index.assign(g.sites.size(), -1);
  for (size_t k = 0; k < b.vertices().size(); ++k) {
    const auto it = std::lower_bound(g.sites.begin(), g.sites.end(), b.vertices()[k]);
    g.boundary_index[static_cast<size_t>(it - g.sites.begin())] = static_cast<int32_t>(k);
  }
  const std::array<LineIndex, 3> lines{LineIndex(0, g.sites), LineIndex(1, g.sites), LineIndex(2, g.sites)};

  for (size_t s = 0; s < g.sites.size(); ++s) {
    const TriPoint x = g.sites[s];
    const int32_t bi = g.boundary_index[s];
    const unsigned sectors = bi >= 0 ? b.inside_sectors(static_cast<size_t>(bi)) : 0x3fu;
    // A first step along direction d stays in the closed region when a
    // triangle beside that edge is inside.
    auto step_ok = [&](int d) { return ((sectors >> d) & 1u) || ((sectors >> ((d + 5) % 6)) & 1u); };

    std::vector<int32_t> out;
    for (int k = 0; k < 3; ++k) {
      const int l = (k + 1) % 3;
      const TriPoint vl = kTriDirs[kPlusDir[l]];
      const LineIndex& rows = lines[static_cast<size_t>(k)];
      const int64_t drift = LineIndex::line(k, vl) - LineIndex::line(k, {0, 0});
      int64_t best = INT64_MAX;
      for (int64_t t = 0; best > 0; ++t) {
        const TriPoint base{x.i + t * vl.i, x.j + t * vl.j};
        const int64_t ln = LineIndex::line(k, base);
        if ((drift > 0 && ln > rows.max_line()) || (drift < 0 && ln < rows.min_line())) break;
        const auto hit = rows.first_from(base, t == 0 ? 1 : 0);
        if (!hit || hit->second >= best) continue;
        best = hit->second;
        // Intermediate points of the parallelogram are all inside or all
        // outside, except in the 1x1 case where its two middle points are
        // not adjacent and either route may be the inside one.
        bool ok;
        if (best == 1 && t == 1) {
          ok = step_ok(kPlusDir[k]) || step_ok(kPlusDir[l]);
        } else {
          ok = step_ok(best > 0 ? kPlusDir[k] : kPlusDir[l]);
        }
        if (ok) out.push_back(hit->first);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int32_t y : out) g.arcs.push_back({static_cast<int32_t>(s), y, tri_alpha(x, g.sites[static_cast<size_t>(y)])});
  }
  return g;
}

LozengeVerdict decide_lozenge(const LozengeBoundary& b) {
  LozengeVerdict v;
  v.p = b.perimeter();
  v.n = b.area();
  const LozengeHeight h = lozenge_boundary_height(b);
  if (!h.valid) {
    v.witness = Witness::InvalidBoundaryHeight;
    return v;
  }
  const TriSubdivision sub = build_tri_subdivision(b);
  const LozengeGraph g = build_lozenge_graph(b, sub);
  v.sites = static_cast<int64_t>(g.sites.size());
  v.arcs = static_cast<int64_t>(g.arcs.size());
  v.max_degree = g.max_out_degree();

  const size_t n = g.sites.size();
  std::vector<std::vector<size_t>> in(n), out(n);
  for (size_t k = 0; k < g.arcs.size(); ++k) {
    out[static_cast<size_t>(g.arcs[k].from)].push_back(k);
    in[static_cast<size_t>(g.arcs[k].to)].push_back(k);
  }
  constexpr int64_t kUnset = INT64_MIN;
  std::vector<int64_t> value(n, kUnset), key(n, INT64_MAX);
  auto violated = [&](const TriArc& a) {
    const int64_t gx = value[static_cast<size_t>(a.from)], gy = value[static_cast<size_t>(a.to)];
    if (gy - gx <= a.alpha) return false;
    v.witness = Witness::ViolatedPair;
    v.x = g.sites[static_cast<size_t>(a.from)];
    v.y = g.sites[static_cast<size_t>(a.to)];
    v.gx = gx;
    v.gy = gy;
    v.alpha_xy = a.alpha;
    return true;
  };
  using Item = std::tuple<int64_t, TriPoint, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  auto relax_from = [&](size_t x) {
    for (size_t k : out[x]) {
      const auto y = static_cast<size_t>(g.arcs[k].to);
      if (value[y] != kUnset) continue;
      const int64_t cand = value[x] + g.arcs[k].alpha;
      if (cand < key[y]) {
        key[y] = cand;
        heap.emplace(cand, g.sites[y], y);
      }
    }
  };

  for (size_t s = 0; s < n; ++s) {
    if (g.boundary_index[s] >= 0) value[s] = h.heights[static_cast<size_t>(g.boundary_index[s])];
  }
  for (const auto& a : g.arcs) {
    if (g.boundary_index[static_cast<size_t>(a.from)] >= 0 && g.boundary_index[static_cast<size_t>(a.to)] >= 0 &&
        violated(a)) {
      return v;
    }
  }
  for (size_t s = 0; s < n; ++s) {
    if (g.boundary_index[s] >= 0) relax_from(s);
  }
  while (!heap.empty()) {
    const auto [k, pt, x] = heap.top();
    heap.pop();
    if (value[x] != kUnset || k != key[x]) continue;
    value[x] = k;
    for (size_t a : out[x]) {
      if (value[static_cast<size_t>(g.arcs[a].to)] != kUnset && violated(g.arcs[a])) return v;
    }
    for (size_t a : in[x]) {
      if (value[static_cast<size_t>(g.arcs[a].from)] != kUnset && violated(g.arcs[a])) return v;
    }
    relax_from(x);
  }
  for (size_t s = 0; s < n; ++s) {
    if (value[s] == kUnset) throw TilerError(ErrorCode::InternalInconsistency, "site unreachable from the boundary");
  }
  v.tileable = true;
  v.g = std::move(value);
  return v;
}

std::string lozenge_verdict_json(const LozengeVerdict& v) {
  nlohmann::json j;
  j["tileable"] = v.tileable;
  switch (v.witness) {
    case Witness::None: j["witness"] = nullptr; break;
    case Witness::InvalidBoundaryHeight: j["witness"] = {{"kind", "InvalidBoundaryHeight"}}; break;
    case Witness::ViolatedPair:
      j["witness"] = {{"kind", "ViolatedPair"}, {"x", {v.x.i, v.x.j}}, {"y", {v.y.i, v.y.j}},
                      {"gx", v.gx},          {"gy", v.gy},          {"alpha_xy", v.alpha_xy}};
      break;
  }
  j["p"] = v.p;
  j["n"] = v.n;
  j["sites"] = v.sites;
  j["edges"] = v.arcs;
  return j.dump();
}

}  // namespace tiler::lozenge
