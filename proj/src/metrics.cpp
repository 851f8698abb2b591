#include "ribbonforge/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

double ExactLength::to_double() const {
  return ribbonforge::to_double(rational) + ribbonforge::to_double(root2) * std::sqrt(2.0);
}

std::string to_string(const ExactLength& v) {
  if (v.root2 == 0) return to_string(v.rational);
  std::string r2 = to_string(v.root2) + "*sqrt(2)";
  if (v.rational == 0) return r2;
  return to_string(v.rational) + (v.root2 > 0 ? " + " : " - ") + to_string(Scalar(abs(v.root2))) + "*sqrt(2)";
}

std::optional<Scalar> MetricValue::rational() const {
  if (!exact || exact->root2 != 0) return std::nullopt;
  return exact->rational;
}

std::string to_string(const MetricValue& v) {
  if (v.exact) return to_string(*v.exact);
  std::ostringstream out;
  out.precision(12);
  out << v.numeric;
  return out.str();
}

namespace {

// Exact length of an edge when it is rational or a rational multiple of
// sqrt(2).
std::optional<ExactLength> exact_edge_length(const Scalar& squared) {
  ExactLength out;
  if (rational_sqrt(squared, out.rational)) return out;
  Scalar half_squared = squared / 2;
  if (rational_sqrt(half_squared, out.root2)) {
    out.rational = 0;
    return out;
  }
  return std::nullopt;
}

bool straight_through(const Point2& prev, const Point2& v, const Point2& next) {
  const double vx = to_double(v.x), vy = to_double(v.y);
  const double ix = vx - to_double(prev.x), iy = vy - to_double(prev.y);
  const double ox = to_double(next.x) - vx, oy = to_double(next.y) - vy;
  const double c = ix * oy - iy * ox;
  // A clearly bent corner needs no exact arithmetic.
  if (std::fabs(c) > 1e-9 * (std::fabs(ix) + std::fabs(iy)) * (std::fabs(ox) + std::fabs(oy)) + 1e-12) {
    return false;
  }
  if (small_dyadic(prev) && small_dyadic(v) && small_dyadic(next)) {
    return c == 0 && ix * ox + iy * oy > 0;
  }
  const Vec2 in = v - prev;
  const Vec2 out = next - v;
  return cross(in, out) == 0 && dot(in, out) > 0;
}

}  // namespace

int count_sticks(const Strand& s) {
  const std::size_t n = s.vertices.size();
  if (s.edge_count() == 0) return 0;
  int corners = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool interior = s.closed || (i > 0 && i + 1 < n);
    if (!interior) continue;
    if (!straight_through(s.vertices[(i + n - 1) % n].position, s.vertices[i].position,
                          s.vertices[(i + 1) % n].position)) {
      ++corners;
    }
  }
  if (s.closed) return std::max(corners, 1);
  return corners + 1;
}

MetricReport measure(const RibbonDiagram& d) {
  if (d.strands.empty()) throw RibbonError(ErrorCode::EmptyDiagram, "diagram has no strands");
  if (d.width <= 0) throw RibbonError(ErrorCode::InvalidDiagram, "width must be positive");
  MetricReport r;
  r.width = d.width;
  r.components = static_cast<int>(d.strands.size());
  ExactLength total{0, 0};
  double numeric = 0;
  bool exact = true;
  for (const auto& s : d.strands) {
    Scalar dx, dy, sq;
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
      const Point2& a = s.vertices[e].position;
      const Point2& b = s.vertices[(e + 1) % s.vertices.size()].position;
      dx = b.x - a.x;
      dy = b.y - a.y;
      // Axis-parallel edges, the common case, need no square root.
      if (dx == 0 || dy == 0) {
        dx = abs(dx) + abs(dy);
        total.rational += dx;
        numeric += to_double(dx);
        continue;
      }
      sq = dx * dx + dy * dy;
      const auto len = exact ? exact_edge_length(sq) : std::nullopt;
      if (len) {
        total.rational += len->rational;
        total.root2 += len->root2;
      } else {
        exact = false;
      }
      numeric += std::sqrt(to_double(sq));
    }
    const int sticks = count_sticks(s);
    r.sticks += sticks;
    if (sticks < 3) r.degenerate_polygon = true;
  }
  r.exact = exact;
  if (exact) {
    r.length.exact = total;
    r.length.numeric = total.to_double();
    ExactLength rib{total.rational / d.width, total.root2 / d.width};
    r.ribbonlength.exact = rib;
    r.ribbonlength.numeric = rib.to_double();
  } else {
    r.length.numeric = numeric;
    r.ribbonlength.numeric = numeric / to_double(d.width);
  }
  return r;
}

namespace {

int twist_sum(const FamilySpec& f) {
  int sum = 0;
  for (int t : f.twists) sum += std::abs(t);
  return sum;
}

}  // namespace

std::optional<Scalar> formula_ribbonlength(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::Torus2: return Scalar(f.param + 3);
    case FamilyKind::Twist: return Scalar(f.param + 6);
    case FamilyKind::Pretzel: return Scalar(twist_sum(f) + 2 * static_cast<int>(f.twists.size()));
    case FamilyKind::Hopf: return Scalar(4);
    default: return std::nullopt;
  }
}

std::optional<int> formula_sticks(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::Torus2: return f.param + 5;
    case FamilyKind::Twist: return f.param + 8;
    case FamilyKind::Pretzel: return twist_sum(f) + 4 * static_cast<int>(f.twists.size());
    case FamilyKind::Hopf: return 4;
    case FamilyKind::PentagonTrefoil: return 5;
    default: return std::nullopt;
  }
}

bool check_crossing_bound(const Scalar& rib, int cr) {
  if (cr < 0) throw RibbonError(ErrorCode::ParameterError, "crossing number must be non-negative");
  return rib <= make_scalar(5 * cr, 2) + 1;
}

bool check_crossing_bound(const MetricValue& rib, int cr) {
  if (cr < 0) throw RibbonError(ErrorCode::ParameterError, "crossing number must be non-negative");
  if (!rib.exact) return rib.numeric <= 2.5 * cr + 1;
  // a + b*sqrt(2) <= c  iff  b*sqrt(2) <= c - a; compare squares by sign.
  const Scalar b = rib.exact->root2;
  const Scalar rest = make_scalar(5 * cr, 2) + 1 - rib.exact->rational;
  if (b <= 0 && rest >= 0) return true;
  if (b >= 0 && rest < 0) return false;
  if (b >= 0) return 2 * b * b <= rest * rest;
  return 2 * b * b >= rest * rest;
}

std::vector<BoundRow> bound_table() {
  return {
      {"0_1", std::nullopt, 0, 0, "unknot (analytic, no construction)"},
      {"3_1", FamilySpec::torus2(3), 6, 3, "trefoil"},
      {"4_1", FamilySpec::twist(2), 8, 4, "figure-8"},
      {"5_1", FamilySpec::torus2(5), 8, 5, "(2,5)-torus"},
      {"5_2", FamilySpec::twist(3), 9, 5, "twist knot T_3"},
      {"6_1", FamilySpec::twist(4), 10, 6, "twist knot T_4"},
      {"6_2", FamilySpec::pretzel({1, 2, 3}), 12, 6, "pretzel P(1,2,3)"},
      {"6_3", FamilySpec::pretzel({2, 1, -3, 1}), 15, 6, "pretzel P(2,1,-3,1)"},
      {"L2a1", FamilySpec::hopf(), 4, 2, "Hopf link"},
      {"L4a1", FamilySpec::torus2(4), 7, 4, "(2,4)-torus"},
      {"L6a3", FamilySpec::torus2(6), 9, 6, "(2,6)-torus"},
  };
}

}  // namespace ribbonforge
