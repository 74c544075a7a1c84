#include "tiler/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tiler/error.hpp"
#include "tiler/reference.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

bool wants(const RenderSpec& spec, const char* layer) {
  return std::find(spec.layers.begin(), spec.layers.end(), layer) != spec.layers.end();
}

void check_layers(const RenderSpec& spec, bool square) {
  for (const auto& l : spec.layers) {
    const bool known = l == "boundary" || l == "subdivision" || (square && (l == "heights" || l == "tiling"));
    if (!known) throw TilerError(ErrorCode::InvalidArgument, "unsupported layer: " + l);
  }
  if (!(spec.scale > 0)) throw TilerError(ErrorCode::InvalidArgument, "scale must be positive");
}

// Maps lattice coordinates to SVG user space (y flipped, one unit margin).
struct Frame {
  double min_x, max_y, scale;
  double X(double x) const { return (x - min_x + 1) * scale; }
  double Y(double y) const { return (max_y - y + 1) * scale; }
  std::string pt(double x, double y) const { return num(X(x)) + "," + num(Y(y)); }
};

void open_svg(std::ostringstream& os, double w, double h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";
}

}  // namespace

std::vector<std::string> parse_layers(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw TilerError(ErrorCode::InvalidArgument, "no layers given");
  return out;
}

std::string render_svg(const RegionBoundary& b, const RenderSpec& spec) {
  check_layers(spec, true);
  const BoundingBox& bb = b.bbox();
  const Frame f{static_cast<double>(bb.min_x), static_cast<double>(bb.max_y), spec.scale};
  std::ostringstream os;
  open_svg(os, (bb.max_x - bb.min_x + 2) * spec.scale, (bb.max_y - bb.min_y + 2) * spec.scale);

  if (wants(spec, "boundary")) {
    os << "<g id=\"boundary\"><polygon fill=\"#f4f4f4\" stroke=\"#000\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < b.vertices().size(); ++i)
      os << (i ? " " : "") << f.pt(b.vertices()[i].x, b.vertices()[i].y);
    os << "\"/></g>\n";
  }
  if (wants(spec, "subdivision")) {
    const Subdivision sub = build_subdivision(b);
    os << "<g id=\"subdivision\" fill=\"none\" stroke=\"#36c\" stroke-width=\"1\">\n";
    for (const auto& s : sub.squares()) {
      os << "<polygon class=\"piece square\" points=\"";
      const auto c = s.corners();
      for (size_t i = 0; i < 4; ++i) os << (i ? " " : "") << f.pt(c[i].x, c[i].y);
      os << "\"/>\n";
    }
    for (const auto& t : sub.triangles()) {
      os << "<polygon class=\"piece triangle\" points=\"" << f.pt(t.right_angle.x, t.right_angle.y) << ' '
         << f.pt(t.a.x, t.a.y) << ' ' << f.pt(t.b.x, t.b.y) << "\"/>\n";
    }
    os << "</g>\n";
  }
  const bool need_field = wants(spec, "tiling") || wants(spec, "heights");
  if (need_field) {
    const FullHeightField field = thurston_full(b);
    if (!field.tileable()) throw TilerError(ErrorCode::NotTileable, "region is not tileable");
    if (wants(spec, "tiling")) {
      os << "<g id=\"tiling\" fill=\"#fc6\" stroke=\"#930\" stroke-width=\"1\">\n";
      for (const auto& d : extract_max_tiling(field)) {
        const int64_t x0 = std::min(d.cell.cx, d.partner.cx), y1 = std::max(d.cell.cy, d.partner.cy) + 1;
        const int64_t w = d.orientation == Orientation::H ? 2 : 1, h = d.orientation == Orientation::H ? 1 : 2;
        const double inset = 0.1;
        os << "<rect class=\"domino\" x=\"" << num(f.X(x0 + inset)) << "\" y=\"" << num(f.Y(y1 - inset))
           << "\" width=\"" << num((w - 2 * inset) * spec.scale) << "\" height=\""
           << num((h - 2 * inset) * spec.scale) << "\"/>\n";
      }
      os << "</g>\n";
    }
    if (wants(spec, "heights")) {
      os << "<g id=\"heights\" font-family=\"monospace\" font-size=\"" << num(spec.scale * 0.35)
         << "\" text-anchor=\"middle\">\n";
      for (int64_t y = bb.min_y; y <= bb.max_y; ++y)
        for (int64_t x = bb.min_x; x <= bb.max_x; ++x)
          if (field.contains_vertex({x, y}))
            os << "<text x=\"" << num(f.X(x)) << "\" y=\"" << num(f.Y(y) - spec.scale * 0.08) << "\">"
               << field.height({x, y}) << "</text>\n";
      os << "</g>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_lozenge_svg(const lozenge::LozengeBoundary& b, const RenderSpec& spec) {
  check_layers(spec, false);
  const double r3 = std::sqrt(3.0) / 2;
  auto px = [](lozenge::TriPoint p) { return p.i - 0.5 * p.j; };
  auto py = [r3](lozenge::TriPoint p) { return r3 * p.j; };
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (auto v : b.vertices()) {
    min_x = std::min(min_x, px(v)), max_x = std::max(max_x, px(v));
    min_y = std::min(min_y, py(v)), max_y = std::max(max_y, py(v));
  }
  const Frame f{min_x, max_y, spec.scale};
  std::ostringstream os;
  open_svg(os, (max_x - min_x + 2) * spec.scale, (max_y - min_y + 2) * spec.scale);
  if (wants(spec, "boundary")) {
    os << "<g id=\"boundary\"><polygon fill=\"#f4f4f4\" stroke=\"#000\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < b.vertices().size(); ++i)
      os << (i ? " " : "") << f.pt(px(b.vertices()[i]), py(b.vertices()[i]));
    os << "\"/></g>\n";
  }
  if (wants(spec, "subdivision")) {
    os << "<g id=\"subdivision\" fill=\"none\" stroke=\"#36c\" stroke-width=\"1\">\n";
    for (const auto& piece : lozenge::build_tri_subdivision(b).pieces) {
      os << "<polygon class=\"piece triangle\" points=\"";
      const auto c = piece.corners();
      for (size_t i = 0; i < 3; ++i) os << (i ? " " : "") << f.pt(px(c[i]), py(c[i]));
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiler
