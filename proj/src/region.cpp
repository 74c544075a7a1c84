#include "tiler/region.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "json.hpp"
#include "tiler/error.hpp"

namespace tiler {

LatticePoint move_step(Move m) {
  switch (m) {
    case Move::Right: return kAxisDirs[0];
    case Move::Up: return kAxisDirs[1];
    case Move::Left: return kAxisDirs[2];
    case Move::Down: return kAxisDirs[3];
  }
  return {};
}

namespace {

Move reverse_move(Move m) {
  switch (m) {
    case Move::Right: return Move::Left;
    case Move::Up: return Move::Down;
    case Move::Left: return Move::Right;
    case Move::Down: return Move::Up;
  }
  return m;
}

std::vector<Move> moves_from_letters(std::string_view text, size_t offset) {
  std::vector<Move> out;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
    switch (c) {
      case 'R': out.push_back(Move::Right); break;
      case 'U': out.push_back(Move::Up); break;
      case 'L': out.push_back(Move::Left); break;
      case 'D': out.push_back(Move::Down); break;
      default:
        throw TilerError(ErrorCode::Parse, "unexpected character '" + std::string(1, text[i]) +
                                               "' at index " + std::to_string(i + offset));
    }
  }
  return out;
}

}  // namespace

std::vector<Move> parse_moves(std::string_view text) {
  size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw TilerError(ErrorCode::Parse, std::string("malformed JSON region: ") + e.what());
    }
    if (!doc.contains("moves") || !doc["moves"].is_string()) {
      throw TilerError(ErrorCode::Parse, "JSON region needs a string field \"moves\"");
    }
    return moves_from_letters(doc["moves"].get<std::string>(), 0);
  }
  return moves_from_letters(text, 0);
}

RegionBoundary parse_boundary(std::string_view text) { return parse_boundary(parse_moves(text)); }

RegionBoundary parse_boundary(const std::vector<Move>& input) {
  if (input.empty()) throw TilerError(ErrorCode::EmptyInterior, "empty boundary word");

  std::vector<LatticePoint> pts;
  pts.reserve(input.size() + 1);
  pts.push_back({0, 0});
  for (Move m : input) pts.push_back(pts.back() + move_step(m));
  if (pts.back() != LatticePoint{0, 0}) {
    throw TilerError(ErrorCode::NotClosed, "boundary walk ends at (" + std::to_string(pts.back().x) +
                                               "," + std::to_string(pts.back().y) +
                                               ") instead of the start");
  }
  pts.pop_back();

  int64_t twice_area = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const LatticePoint a = pts[i];
    const LatticePoint b = pts[(i + 1) % pts.size()];
    twice_area += a.x * b.y - b.x * a.y;
  }
  if (twice_area == 0) throw TilerError(ErrorCode::EmptyInterior, "boundary encloses no area");

  std::vector<std::pair<LatticePoint, size_t>> sorted;
  sorted.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) sorted.emplace_back(pts[i], i);
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      const LatticePoint p = sorted[i].first;
      throw TilerError(ErrorCode::SelfIntersecting,
                       "boundary revisits vertex (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ") at steps " +
                           std::to_string(sorted[i - 1].second) + " and " +
                           std::to_string(sorted[i].second));
    }
  }

  RegionBoundary out;
  if (twice_area > 0) {
    out.moves_ = input;
    out.vertices_ = std::move(pts);
  } else {
    // Clockwise input: walk it backwards from the same start vertex.
    out.moves_.reserve(input.size());
    for (auto it = input.rbegin(); it != input.rend(); ++it) out.moves_.push_back(reverse_move(*it));
    out.vertices_.reserve(pts.size());
    out.vertices_.push_back(pts[0]);
    for (size_t i = pts.size() - 1; i > 0; --i) out.vertices_.push_back(pts[i]);
    twice_area = -twice_area;
    for (auto& [p, idx] : sorted) idx = idx == 0 ? 0 : pts.size() - idx;
  }
  out.area_ = twice_area / 2;
  out.sorted_ = std::move(sorted);

  BoundingBox bb{out.vertices_[0].x, out.vertices_[0].y, out.vertices_[0].x, out.vertices_[0].y};
  for (const auto& p : out.vertices_) {
    bb.min_x = std::min(bb.min_x, p.x);
    bb.min_y = std::min(bb.min_y, p.y);
    bb.max_x = std::max(bb.max_x, p.x);
    bb.max_y = std::max(bb.max_y, p.y);
  }
  out.bbox_ = bb;
  return out;
}

std::optional<size_t> RegionBoundary::index_of(LatticePoint p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p,
                             [](const auto& e, const LatticePoint& q) { return e.first < q; });
  if (it == sorted_.end() || it->first != p) return std::nullopt;
  return it->second;
}

int RegionBoundary::out_dir(size_t i) const {
  return axis_dir_index(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
}

unsigned RegionBoundary::inside_quadrants(size_t i) const {
  const size_t n = vertices_.size();
  const int out = out_dir(i);
  const int back = axis_dir_index(vertices_[(i + n - 1) % n] - vertices_[i]);
  // Interior lies counterclockwise from the outgoing edge up to the incoming one.
  unsigned mask = 0;
  for (int q = out; q != back; q = (q + 1) % 4) mask |= 1u << q;
  return mask;
}

std::string RegionBoundary::word() const {
  std::string s;
  s.reserve(moves_.size());
  for (Move m : moves_) s.push_back(static_cast<char>(m));
  return s;
}

BoundaryHeight boundary_height(const RegionBoundary& b) {
  const auto& v = b.vertices();
  BoundaryHeight out;
  out.heights.resize(v.size());
  int64_t h = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    out.heights[i] = h;
    h += edge_deltas(v[i], v[(i + 1) % v.size()]).step;
  }
  out.valid = h == 0;
  return out;
}

bool contains_cell(const RegionBoundary& b, CellCoord c) {
  // Ray to the right through the cell center; count vertical boundary edges.
  const auto& v = b.vertices();
  int crossings = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const LatticePoint a = v[i];
    const LatticePoint e = v[(i + 1) % v.size()];
    if (a.x != e.x || a.x <= c.cx) continue;
    if (std::min(a.y, e.y) == c.cy) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace tiler
