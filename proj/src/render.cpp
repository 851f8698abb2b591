#include "ribbonforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ribbonforge/constructions.hpp"
#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

struct V2 {
  double x = 0, y = 0;
};

V2 operator+(V2 a, V2 b) { return {a.x + b.x, a.y + b.y}; }
V2 operator-(V2 a, V2 b) { return {a.x - b.x, a.y - b.y}; }
V2 operator*(double k, V2 a) { return {k * a.x, k * a.y}; }
double crs(V2 a, V2 b) { return a.x * b.y - a.y * b.x; }

V2 unit(V2 a) {
  const double n = std::hypot(a.x, a.y);
  return {a.x / n, a.y / n};
}

V2 normal(V2 a) { return {-a.y, a.x}; }

V2 at(const Strand& s, std::size_t i) {
  const auto& p = s.vertices[i % s.vertices.size()].position;
  return {to_double(p.x), to_double(p.y)};
}

bool is_corner(const Strand& s, std::size_t i) {
  const std::size_t n = s.vertices.size();
  const Point2& prev = s.vertices[(i + n - 1) % n].position;
  const Point2& v = s.vertices[i].position;
  const Point2& next = s.vertices[(i + 1) % n].position;
  const Vec2 in = v - prev, out = next - v;
  return cross(in, out) != 0 || dot(in, out) <= 0;
}

// Fold triangles around corner v: the parts of both strips between their
// cross-sections at v and the fold line. Long fold lines at shallow bends
// are cut off at 3 half-widths so the picture stays readable.
std::vector<std::pair<double, double>> fold_corners(V2 prev, V2 v, V2 next, double r) {
  const V2 a = unit(v - prev), b = unit(next - v);
  V2 f = a + b;
  f = std::hypot(f.x, f.y) < 1e-12 ? normal(a) : unit(f);
  const double c = crs(f, a);
  double u = std::fabs(c) < 1e-12 ? 3 * r : std::min(r / std::fabs(c), 3 * r);
  if (c < 0) u = -u;
  std::vector<V2> pts = {v + r * normal(a), v - u * f, v - r * normal(b),
                         v - r * normal(a), v + u * f, v + r * normal(b)};
  std::sort(pts.begin(), pts.end(), [&](V2 p, V2 q) {
    return std::atan2(p.y - v.y, p.x - v.x) < std::atan2(q.y - v.y, q.x - v.x);
  });
  std::vector<std::pair<double, double>> out;
  for (auto p : pts) out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

std::vector<Panel> ribbon_panels(const RibbonDiagram& d) {
  const double r = to_double(d.width) / 2;
  std::vector<Panel> panels;
  for (std::size_t si = 0; si < d.strands.size(); ++si) {
    const Strand& s = d.strands[si];
    const std::size_t n = s.vertices.size();
    const std::size_t edges = s.edge_count();
    if (edges == 0) continue;
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < n; ++i) {
      const bool interior = s.closed || (i > 0 && i + 1 < n);
      if (interior && is_corner(s, i)) corners.push_back(i);
    }
    auto layer = [&](std::size_t e) { return e < s.layers.size() ? s.layers[e] : 0; };

    // Stick runs start at a corner (or the open start) and end at the next.
    std::vector<std::size_t> starts = corners;
    if (!s.closed) starts.insert(starts.begin(), 0);
    if (starts.empty()) starts.push_back(0);  // closed with no corner
    for (std::size_t k = 0; k < starts.size(); ++k) {
      const std::size_t from = starts[k];
      std::size_t to;
      if (k + 1 < starts.size()) {
        to = starts[k + 1];
      } else {
        to = s.closed ? starts[0] + n : n - 1;
      }
      Panel p;
      p.kind = Panel::Kind::Stick;
      p.strand = si;
      p.index = from;
      p.layer = std::numeric_limits<int>::min();
      for (std::size_t e = from; e < to; ++e) p.layer = std::max(p.layer, layer(e % n));
      const V2 a = at(s, from), b = at(s, to);
      const V2 off = r * normal(unit(b - a));
      for (V2 q : {a + off, b + off, b - off, a - off}) p.corners.emplace_back(q.x, q.y);
      panels.push_back(std::move(p));
    }
    for (std::size_t i : corners) {
      Panel p;
      p.kind = Panel::Kind::Fold;
      p.strand = si;
      p.index = i;
      p.layer = std::max(layer((i + edges - 1) % edges), layer(i % edges));
      p.corners = fold_corners(at(s, i + n - 1), at(s, i), at(s, i + 1), r);
      panels.push_back(std::move(p));
    }
  }
  std::stable_sort(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) {
    if (a.layer != b.layer) return a.layer < b.layer;
    if (a.strand != b.strand) return a.strand < b.strand;
    return a.index < b.index;
  });
  return panels;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

const char* const kPalette[] = {"#3b6ea5", "#c0504d", "#6a9a3b", "#8064a2", "#d08a2c", "#2c9aa0"};

}  // namespace

std::string to_svg(const RibbonDiagram& input, const RenderOptions& opts) {
  if (!(opts.scale > 0)) throw RibbonError(ErrorCode::ParameterError, "scale must be positive");
  if (!(opts.opacity >= 0 && opts.opacity <= 1)) {
    throw RibbonError(ErrorCode::ParameterError, "opacity must lie in [0,1]");
  }
  if (input.strands.empty()) throw RibbonError(ErrorCode::EmptyDiagram, "diagram has no strands");
  RibbonDiagram rebuilt;
  const RibbonDiagram* dp = &input;
  if (opts.mode && !(*opts.mode == input.layout) && input.family &&
      input.family->kind != FamilyKind::PentagonTrefoil) {
    rebuilt = build_family(*input.family, *opts.mode);
    dp = &rebuilt;
  }
  const RibbonDiagram& d = *dp;
  const double sc = opts.scale;
  const auto panels = ribbon_panels(d);

  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& p : panels) {
    for (auto [x, y] : p.corners) grow(x, y);
  }
  for (const auto& s : d.strands) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) grow(at(s, i).x, at(s, i).y);
  }
  x0 -= 1, y0 -= 1, x1 += 1, y1 += 1;
  // SVG's y axis points down; flip so the diagram reads as drawn.
  auto X = [&](double x) { return num(x * sc); };
  auto Y = [&](double y) { return num(-y * sc); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 * sc) << ' ' << num(-y1 * sc) << ' '
    << num((x1 - x0) * sc) << ' ' << num((y1 - y0) * sc) << "\" width=\"" << num((x1 - x0) * sc)
    << "\" height=\"" << num((y1 - y0) * sc) << "\">\n";
  o << "<g stroke=\"#222\" stroke-width=\"" << num(0.01 * sc) << "\" stroke-linejoin=\"round\">\n";
  for (const auto& p : panels) {
    o << "<polygon class=\"" << (p.kind == Panel::Kind::Stick ? "stick" : "fold") << "\" data-strand=\""
      << p.strand << "\" data-layer=\"" << p.layer << "\" fill=\"" << kPalette[p.strand % 6]
      << "\" fill-opacity=\"" << num(opts.opacity) << "\" points=\"";
    for (std::size_t i = 0; i < p.corners.size(); ++i) {
      o << (i ? " " : "") << X(p.corners[i].first) << ',' << Y(p.corners[i].second);
    }
    o << "\"/>\n";
  }
  o << "</g>\n";

  if (opts.show_fold_lines) {
    const double r = to_double(d.width) / 2;
    o << "<g stroke=\"#000\" stroke-width=\"" << num(0.008 * sc) << "\" stroke-dasharray=\"" << num(0.04 * sc)
      << ' ' << num(0.03 * sc) << "\">\n";
    for (const auto& p : panels) {
      if (p.kind != Panel::Kind::Fold) continue;
      const Strand& s = d.strands[p.strand];
      const std::size_t n = s.vertices.size();
      const V2 prev = at(s, p.index + n - 1), v = at(s, p.index), next = at(s, p.index + 1);
      const V2 a = unit(v - prev);
      V2 f = a + unit(next - v);
      f = std::hypot(f.x, f.y) < 1e-12 ? normal(a) : unit(f);
      const double c = std::fabs(crs(f, a));
      const double u = c < 1e-12 ? 3 * r : std::min(r / c, 3 * r);
      const V2 e0 = v - u * f, e1 = v + u * f;
      o << "<line class=\"fold-line\" x1=\"" << X(e0.x) << "\" y1=\"" << Y(e0.y) << "\" x2=\"" << X(e1.x)
        << "\" y2=\"" << Y(e1.y) << "\"/>\n";
    }
    o << "</g>\n";
  }

  if (opts.show_centerline) {
    o << "<g fill=\"none\" stroke=\"#000\" stroke-width=\"" << num(0.006 * sc) << "\">\n";
    for (const auto& s : d.strands) {
      o << (s.closed ? "<polygon" : "<polyline") << " class=\"centerline\" points=\"";
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        o << (i ? " " : "") << X(at(s, i).x) << ',' << Y(at(s, i).y);
      }
      o << "\"/>\n";
    }
    o << "</g>\n";
  }

  if (opts.label_ends) {
    o << "<g font-family=\"sans-serif\" font-size=\"" << num(0.18 * sc) << "\">\n";
    for (std::size_t si = 0; si < d.strands.size(); ++si) {
      const Strand& s = d.strands[si];
      if (s.vertices.empty()) continue;
      const V2 p0 = at(s, 0);
      o << "<text x=\"" << X(p0.x) << "\" y=\"" << Y(p0.y) << "\">s" << si << (s.closed ? "" : " start")
        << "</text>\n";
      if (!s.closed) {
        const V2 p1 = at(s, s.vertices.size() - 1);
        o << "<text x=\"" << X(p1.x) << "\" y=\"" << Y(p1.y) << "\">s" << si << " end</text>\n";
      }
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace ribbonforge
