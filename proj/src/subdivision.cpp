#include "tiler/subdivision.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>

#include "tiler/error.hpp"

namespace tiler {

namespace {

// Where the boundary loop crosses the perimeter of a square, by position
// along that perimeter (counterclockwise, doubled units).
struct CrossingEvent {
  int64_t tau2 = 0;
  bool entry = false;
};

uint64_t cell_key(int64_t a, int64_t b) {
  return (static_cast<uint64_t>(a) << 32) ^ static_cast<uint64_t>(b);
}

// Doubled counterclockwise perimeter coordinate of a point on the boundary
// of the box [u0, u0+L] x [v0, v0+L]. Sides start at the corners
// (u0,v0), (u0+L,v0), (u0+L,v0+L), (u0,v0+L).
int64_t perimeter_tau2(UV o, int64_t side, UV p) {
  if (p.v == o.v && p.u < o.u + side) return 2 * (p.u - o.u);
  if (p.u == o.u + side && p.v < o.v + side) return 2 * (side + (p.v - o.v));
  if (p.v == o.v + side && p.u > o.u) return 2 * (2 * side + (o.u + side - p.u));
  return 2 * (3 * side + (o.v + side - p.v));
}

// Start of the perimeter stretch for the side facing direction d.
int64_t side_start_tau2(int64_t side, int d) {
  switch (d) {
    case 3: return 0;
    case 0: return 2 * side;
    case 1: return 4 * side;
    default: return 6 * side;
  }
}

}  // namespace

int64_t si_bound(int level) {
  if (level <= 0) return 1;
  return 9 * (int64_t{1} << (level - 1));
}

RotatedSquare Subdivision::square_of(const QuadNode& n) const {
  const UV o = node_origin(n);
  const int64_t s = side_at(n.level);
  return {from_uv({o.u + s / 2, o.v + s / 2}), s / 2, n.level};
}

int64_t Subdivision::doubled_area() const {
  int64_t total = static_cast<int64_t>(triangles_.size());
  for (const auto& sq : squares_) total += 4 * sq.half_diagonal * sq.half_diagonal;
  return total;
}

int32_t Subdivision::locate_scaled(UV q, int64_t scale) const {
  if (nodes_.empty()) return -1;
  int32_t fallback = -1;
  // Depth-first over the (at most four) closed boxes containing q per level.
  std::vector<int32_t> stack{0};
  while (!stack.empty()) {
    const int32_t id = stack.back();
    stack.pop_back();
    const QuadNode& n = nodes_[static_cast<size_t>(id)];
    const UV o = node_origin(n);
    const int64_t s = side_at(n.level);
    if (q.u < o.u * scale || q.u > (o.u + s) * scale || q.v < o.v * scale || q.v > (o.v + s) * scale) continue;
    if (n.child[0] < 0) {
      if (n.status == SquareStatus::Inside) return id;
      if (fallback < 0 || n.status == SquareStatus::Boundary) fallback = id;
      continue;
    }
    for (int32_t c : n.child) stack.push_back(c);
  }
  return fallback;
}

void Subdivision::dump(std::ostream& os) const {
  for (const auto& sq : squares_) {
    os << "SQ " << sq.level << ' ' << sq.center.x << ' ' << sq.center.y << ' ' << sq.half_diagonal << '\n';
  }
  for (const auto& t : triangles_) {
    os << "TR " << t.right_angle.x << ' ' << t.right_angle.y << ' ' << t.a.x << ' ' << t.a.y << ' ' << t.b.x
       << ' ' << t.b.y << '\n';
  }
}

Subdivision build_subdivision(const RegionBoundary& b) {
  const auto& verts = b.vertices();
  const size_t p = verts.size();

  Subdivision sub;
  int64_t n0 = 1;
  int levels = 0;
  while (n0 < 2 * static_cast<int64_t>(p)) {
    n0 *= 2;
    ++levels;
  }
  sub.levels_ = levels;
  sub.root_side_ = 2 * n0;

  int64_t umin = to_uv(verts[0]).u, umax = umin, vmin = to_uv(verts[0]).v, vmax = vmin;
  for (const auto& pt : verts) {
    const UV q = to_uv(pt);
    umin = std::min(umin, q.u);
    umax = std::max(umax, q.u);
    vmin = std::min(vmin, q.v);
    vmax = std::max(vmax, q.v);
  }
  UV origin{floor_div(umin + umax, 2) - n0, floor_div(vmin + vmax, 2) - n0};
  if (floor_mod(origin.u - origin.v, 2) != 0) origin.v -= 1;
  sub.origin_ = origin;

  auto& nodes = sub.nodes_;
  nodes.push_back(QuadNode{});
  nodes[0].status = SquareStatus::Boundary;
  std::vector<int32_t> boundary_prev{0};
  sub.boundary_counts_.push_back(1);

  std::vector<UV> uv(p);
  for (size_t k = 0; k < p; ++k) uv[k] = to_uv(verts[k]);

  for (int level = 1; level <= levels; ++level) {
    const int64_t side = sub.side_at(level);

    // Split every boundary square of the previous level.
    std::unordered_map<uint64_t, int32_t> by_cell;
    std::vector<int32_t> fresh;
    fresh.reserve(4 * boundary_prev.size());
    for (int32_t pid : boundary_prev) {
      for (int q = 0; q < 4; ++q) {
        QuadNode c;
        c.level = level;
        c.a = 2 * nodes[static_cast<size_t>(pid)].a + (q & 1);
        c.b = 2 * nodes[static_cast<size_t>(pid)].b + (q >> 1);
        c.parent = pid;
        const auto id = static_cast<int32_t>(nodes.size());
        nodes.push_back(c);
        nodes[static_cast<size_t>(pid)].child[static_cast<size_t>(q)] = id;
        by_cell.emplace(cell_key(c.a, c.b), id);
        fresh.push_back(id);
      }
    }

    // Side neighbors from the parent's neighbors.
    for (int32_t pid : boundary_prev) {
      const QuadNode parent = nodes[static_cast<size_t>(pid)];
      for (int q = 0; q < 4; ++q) {
        const int du = q & 1, dv = q >> 1;
        QuadNode& c = nodes[static_cast<size_t>(parent.child[static_cast<size_t>(q)])];
        auto across = [&](int dir, int sibling_q, bool inside, int mirrored_q) {
          if (inside) return parent.child[static_cast<size_t>(sibling_q)];
          const int32_t nb = parent.nbr[static_cast<size_t>(dir)];
          if (nb < 0) return int32_t{-1};
          const QuadNode& nn = nodes[static_cast<size_t>(nb)];
          return nn.child[0] >= 0 ? nn.child[static_cast<size_t>(mirrored_q)] : nb;
        };
        c.nbr[0] = across(0, 1 + 2 * dv, du == 0, 0 + 2 * dv);
        c.nbr[1] = across(1, du + 2, dv == 0, du);
        c.nbr[2] = across(2, 2 * dv, du == 1, 1 + 2 * dv);
        c.nbr[3] = across(3, du, dv == 1, du + 2);
      }
    }

    // Walk the boundary: mark squares containing an edge and record where
    // the loop passes from one square into another.
    auto edge_cell = [&](size_t k) {
      const UV a = uv[k], e = uv[(k + 1) % p];
      const int64_t ca = floor_div(a.u + e.u - 2 * origin.u, 2 * side);
      const int64_t cb = floor_div(a.v + e.v - 2 * origin.v, 2 * side);
      auto it = by_cell.find(cell_key(ca, cb));
      if (it == by_cell.end()) {
        throw TilerError(ErrorCode::InternalInconsistency, "boundary edge outside the refined squares");
      }
      return it->second;
    };
    std::vector<int32_t> edge_node(p);
    for (size_t k = 0; k < p; ++k) edge_node[k] = edge_cell(k);

    std::vector<int32_t> boundary_now;
    std::unordered_map<int32_t, std::vector<CrossingEvent>> events;
    for (size_t k = 0; k < p; ++k) {
      QuadNode& n = nodes[static_cast<size_t>(edge_node[k])];
      if (n.status != SquareStatus::Boundary) {
        n.status = SquareStatus::Boundary;
        boundary_now.push_back(edge_node[k]);
      }
      const int32_t before = edge_node[(k + p - 1) % p];
      const int32_t after = edge_node[k];
      if (before != after) {
        const QuadNode& nb = nodes[static_cast<size_t>(before)];
        const QuadNode& na = nodes[static_cast<size_t>(after)];
        events[before].push_back({perimeter_tau2(sub.node_origin(nb), side, uv[k]), false});
        events[after].push_back({perimeter_tau2(sub.node_origin(na), side, uv[k]), true});
      }
    }

    // Side of the loop on which the shared side with `from` lies: walk the
    // boundary square's perimeter counterclockwise from just past the start
    // of that side to the first crossing. Points just before an entry are
    // inside the region.
    auto status_via = [&](int32_t boundary_square, int side_dir) {
      const auto it = events.find(boundary_square);
      if (it == events.end() || it->second.empty()) return SquareStatus::Outside;
      const int64_t start = side_start_tau2(side, side_dir) + 1;
      const int64_t period = 8 * side;
      const CrossingEvent* best = nullptr;
      int64_t best_gap = period + 1;
      for (const auto& ev : it->second) {
        const int64_t gap = floor_mod(ev.tau2 - start, period);
        if (gap < best_gap) {
          best_gap = gap;
          best = &ev;
        }
      }
      return best->entry ? SquareStatus::Inside : SquareStatus::Outside;
    };

    auto resolve = [&](int32_t seed, SquareStatus st) {
      std::vector<int32_t> stack{seed};
      nodes[static_cast<size_t>(seed)].status = st;
      while (!stack.empty()) {
        const int32_t x = stack.back();
        stack.pop_back();
        for (int32_t y : nodes[static_cast<size_t>(x)].nbr) {
          if (y < 0) continue;
          QuadNode& ny = nodes[static_cast<size_t>(y)];
          if (ny.level == level && ny.status == SquareStatus::Pending) {
            ny.status = st;
            stack.push_back(y);
          }
        }
      }
    };

    for (int32_t id : fresh) {
      const QuadNode& n = nodes[static_cast<size_t>(id)];
      if (n.status != SquareStatus::Pending) continue;
      bool inside = false, outside = false;
      int32_t via = -1;
      int via_dir = 0;
      for (int d = 0; d < 4; ++d) {
        const int32_t y = n.nbr[static_cast<size_t>(d)];
        if (y < 0) {
          outside = true;
          continue;
        }
        switch (nodes[static_cast<size_t>(y)].status) {
          case SquareStatus::Inside: inside = true; break;
          case SquareStatus::Outside: outside = true; break;
          case SquareStatus::Boundary:
            if (via < 0) {
              via = y;
              via_dir = (d + 2) % 4;
            }
            break;
          case SquareStatus::Pending: break;
        }
      }
      if (inside) {
        resolve(id, SquareStatus::Inside);
      } else if (outside) {
        resolve(id, SquareStatus::Outside);
      } else if (via >= 0) {
        resolve(id, status_via(via, via_dir));
      }
      // Otherwise some same-level neighbor resolves it by flooding.
    }
    for (int32_t id : fresh) {
      if (nodes[static_cast<size_t>(id)].status == SquareStatus::Pending) {
        throw TilerError(ErrorCode::InternalInconsistency, "unclassified square at level " + std::to_string(level));
      }
    }

    sub.boundary_counts_.push_back(static_cast<int64_t>(boundary_now.size()));
    boundary_prev = std::move(boundary_now);
  }

  // Collect pieces: interior squares of every level, then the interior
  // triangles of the final boundary squares.
  for (auto& n : nodes) {
    if (n.status == SquareStatus::Inside && n.child[0] < 0) sub.squares_.push_back(sub.square_of(n));
  }
  for (int32_t id : boundary_prev) {
    QuadNode& n = nodes[static_cast<size_t>(id)];
    const UV o = sub.node_origin(n);
    const LatticePoint center = from_uv({o.u + 1, o.v + 1});
    const auto idx = b.index_of(center);
    if (!idx) throw TilerError(ErrorCode::InternalInconsistency, "final boundary square not centered on the loop");
    const unsigned mask = b.inside_quadrants(*idx);
    n.first_triangle = static_cast<int32_t>(sub.triangles_.size());
    for (int q = 0; q < 4; ++q) {
      if (!(mask & (1u << q))) continue;
      sub.triangles_.push_back({center, center + kAxisDirs[q], center + kAxisDirs[(q + 1) % 4]});
      ++n.triangle_count;
    }
  }
  return sub;
}

std::vector<int64_t> si_census(const RegionBoundary& b) { return build_subdivision(b).boundary_counts(); }

}  // namespace tiler
