#include "ribbonforge/geometry.hpp"

#include <cmath>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::NoFoldNeeded: return "NoFoldNeeded";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::LedgerError: return "LedgerError";
    case ErrorCode::GenericityError: return "GenericityError";
    case ErrorCode::ComponentError: return "ComponentError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

std::optional<Vec2> exact_unit(const Vec2& v) {
  Scalar len;
  if (!rational_sqrt(norm2(v), len) || len == 0) return std::nullopt;
  return Vec2{v.x / len, v.y / len};
}

double fold_angle_at(const Point2& prev, const Point2& v, const Point2& next) {
  if (prev == v || next == v) {
    throw RibbonError(ErrorCode::DegenerateVertex, "fold vertex coincides with a neighbour");
  }
  // Floating point is accurate enough for long edges at a clear corner;
  // short edges and nearly straight corners go through exact differences.
  {
    const double vx = to_double(v.x), vy = to_double(v.y);
    const double ux = to_double(prev.x) - vx, uy = to_double(prev.y) - vy;
    const double wx = to_double(next.x) - vx, wy = to_double(next.y) - vy;
    const double lu = std::hypot(ux, uy), lw = std::hypot(wx, wy);
    const double c = ux * wy - uy * wx;
    if ((lu > 1e-3 && lw > 1e-3 && std::fabs(c) > 1e-6 * lu * lw) ||
        (small_dyadic(prev) && small_dyadic(v) && small_dyadic(next))) {
      const double d = ux * wx + uy * wy;
      if (c == 0) return d > 0 ? 0.0 : M_PI;
      return std::atan2(std::fabs(c), d);
    }
  }
  const Vec2 u = prev - v;
  const Vec2 w = next - v;
  const double ux = to_double(u.x), uy = to_double(u.y), wx = to_double(w.x), wy = to_double(w.y);
  const double c = ux * wy - uy * wx;
  const double d = ux * wx + uy * wy;
  if (std::fabs(c) > 1e-6 * std::hypot(ux, uy) * std::hypot(wx, wy)) return std::atan2(std::fabs(c), d);
  const Scalar exact = cross(u, w);
  if (exact == 0) return d > 0 ? 0.0 : M_PI;
  return std::atan2(std::fabs(to_double(exact)), to_double(dot(u, w)));
}

Line fold_line_at(const Point2& prev, const Point2& v, const Point2& next) {
  if (prev == v || next == v) {
    throw RibbonError(ErrorCode::DegenerateVertex, "fold vertex coincides with a neighbour");
  }
  const Vec2 in = v - prev;
  const Vec2 out = next - v;
  if (cross(in, out) == 0 && dot(in, out) > 0) {
    throw RibbonError(ErrorCode::NoFoldNeeded, "collinear straight-through vertex");
  }
  auto in_unit = exact_unit(in);
  auto out_unit = exact_unit(out);
  bool exact = in_unit && out_unit;
  Vec2 a, b;
  if (exact) {
    a = *in_unit;
    b = *out_unit;
  } else {
    const double li = std::sqrt(to_double(norm2(in)));
    const double lo = std::sqrt(to_double(norm2(out)));
    a = {Scalar(to_double(in.x) / li), Scalar(to_double(in.y) / li)};
    b = {Scalar(to_double(out.x) / lo), Scalar(to_double(out.y) / lo)};
  }
  Vec2 dir{a.x + b.x, a.y + b.y};
  if (dir.x == 0 && dir.y == 0) {
    // Doubling back: the mirror is perpendicular to the ribbon.
    dir = {-a.y, a.x};
  }
  return Line{v, dir, exact};
}

Vec2 reflect_direction(const Vec2& v, const Line& line) {
  const Vec2 n{-line.direction.y, line.direction.x};
  const Scalar k = 2 * dot(v, n) / norm2(n);
  return {v.x - k * n.x, v.y - k * n.y};
}

Point2 reflect(const Point2& p, const Line& line) {
  return line.point + reflect_direction(p - line.point, line);
}

Intersection proper_intersection(const Segment& s1, const Segment& s2) {
  Intersection out;
  const Vec2 r = s1.b - s1.a;
  const Vec2 s = s2.b - s2.a;
  const Vec2 qp = s2.a - s1.a;
  const Scalar denom = cross(r, s);
  if (denom == 0) {
    if (cross(qp, r) != 0) return out;  // parallel, disjoint lines
    // Collinear: project s2 onto s1.
    const Scalar rr = norm2(r);
    Scalar t0 = dot(qp, r) / rr;
    Scalar t1 = dot(s2.b - s1.a, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    if (t1 < 0 || t0 > 1) return out;
    if (t1 == 0 || t0 == 1) {
      out.kind = IntersectionKind::EndpointTouch;
      out.point = t1 == 0 ? s1.a : s1.b;
      return out;
    }
    out.kind = IntersectionKind::DegenerateOverlap;
    return out;
  }
  const Scalar t = cross(qp, s) / denom;
  const Scalar u = cross(qp, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.point = s1.a + t * r;
  out.param1 = t;
  out.param2 = u;
  if (t == 0 || t == 1 || u == 0 || u == 1) {
    out.kind = IntersectionKind::EndpointTouch;
  } else {
    out.kind = IntersectionKind::Proper;
  }
  return out;
}

}  // namespace ribbonforge
