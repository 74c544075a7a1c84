#include "tiler/generators.hpp"

#include <cstdlib>

#include "tiler/error.hpp"
#include "tiler/reference.hpp"
#include "tiler/region.hpp"

namespace tiler {

namespace {

std::string word_of(const std::vector<CellCoord>& cells) {
  const auto moves = cells_to_moves(cells);
  if (!moves) throw TilerError(ErrorCode::InternalInconsistency, "generated cells have no simple boundary");
  std::string w;
  w.reserve(moves->size());
  for (Move m : *moves) w += static_cast<char>(m);
  return w;
}

void require(bool ok, const char* what) {
  if (!ok) throw TilerError(ErrorCode::InvalidArgument, what);
}

template <class Arm>
std::vector<CellCoord> walk_cells(int64_t n, Arm arm) {
  std::vector<CellCoord> cells{{0, 0}};
  CellCoord cur{0, 0};
  for (int64_t a = 0; static_cast<int64_t>(cells.size()) < n; ++a) {
    const auto [dir, len] = arm(a);
    for (int64_t s = 0; s < len && static_cast<int64_t>(cells.size()) < n; ++s) {
      cur = {cur.cx + kAxisDirs[dir].x, cur.cy + kAxisDirs[dir].y};
      cells.push_back(cur);
    }
  }
  return cells;
}

}  // namespace

std::string gen_rect(int64_t w, int64_t h) {
  require(w >= 1 && h >= 1, "rect needs positive width and height");
  std::string s;
  s.append(static_cast<size_t>(w), 'R').append(static_cast<size_t>(h), 'U');
  s.append(static_cast<size_t>(w), 'L').append(static_cast<size_t>(h), 'D');
  return s;
}

std::string gen_aztec(int64_t k) {
  require(k >= 1 && k <= 4096, "aztec order must be in 1..4096");
  std::vector<CellCoord> cells;
  for (int64_t cy = -k; cy < k; ++cy)
    for (int64_t cx = -k; cx < k; ++cx)
      if (std::abs(2 * cx + 1) + std::abs(2 * cy + 1) <= 2 * k) cells.push_back({cx, cy});
  return word_of(cells);
}

std::string gen_spiral(int64_t n) {
  require(n >= 1 && n <= 1000000, "spiral length must be in 1..1e6");
  // Arms east, north, west, south with lengths 2, 2, 4, 4, 6, 6, ...
  return word_of(walk_cells(n, [](int64_t a) { return std::pair<int, int64_t>{static_cast<int>(a % 4), 2 * (a / 2 + 1)}; }));
}

std::string gen_snake(int64_t n, int64_t width) {
  require(n >= 1 && n <= 1000000, "snake length must be in 1..1e6");
  require(width >= 2, "snake width must be at least 2");
  return word_of(walk_cells(n, [width](int64_t a) {
    if (a % 2 == 1) return std::pair<int, int64_t>{1, 2};
    return std::pair<int, int64_t>{(a / 2) % 2 == 0 ? 0 : 2, width - 1};
  }));
}

std::string gen_random(int64_t area, uint64_t seed) {
  require(area >= 1 && area <= 1000000, "random area must be in 1..1e6");
  return word_of(random_simply_connected(area, seed));
}

std::string dilate(const std::string& word, int64_t k) {
  require(k >= 1, "dilation factor must be positive");
  std::string s;
  s.reserve(word.size() * static_cast<size_t>(k));
  for (char c : word) s.append(static_cast<size_t>(k), c);
  return s;
}

std::string generate(const std::string& family, const std::vector<int64_t>& p, uint64_t seed) {
  auto need = [&](size_t count) {
    if (p.size() != count)
      throw TilerError(ErrorCode::InvalidArgument, family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "rect") { need(2); return gen_rect(p[0], p[1]); }
  if (family == "aztec") { need(1); return gen_aztec(p[0]); }
  if (family == "spiral") { need(1); return gen_spiral(p[0]); }
  if (family == "snake") {
    if (p.size() == 1) return gen_snake(p[0], 8);
    need(2);
    return gen_snake(p[0], p[1]);
  }
  if (family == "random") { need(1); return gen_random(p[0], seed); }
  throw TilerError(ErrorCode::InvalidArgument, "unknown family: " + family);
}

}  // namespace tiler
