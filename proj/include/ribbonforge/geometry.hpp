#pragma once

#include <optional>

#include "ribbonforge/scalar.hpp"

namespace ribbonforge {

struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

using Vec2 = Point2;

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(const Scalar& k, const Vec2& v) { return {k * v.x, k * v.y}; }
inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline bool small_dyadic(const Point2& p) { return small_dyadic(p.x) && small_dyadic(p.y); }
inline Scalar norm2(const Vec2& v) { return dot(v, v); }

/// Returns the unit vector along `v` when |v| is rational.
std::optional<Vec2> exact_unit(const Vec2& v);

/// A line through `point` with nonzero `direction`. `exact` is false when
/// the direction had to be rounded (irrational edge lengths).
struct Line {
  Point2 point;
  Vec2 direction;
  bool exact = true;
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// Interior angle at `v` between the edges towards `prev` and `next`,
/// in [0, pi]. 0 means the ribbon doubles back, pi means straight through.
double fold_angle_at(const Point2& prev, const Point2& v, const Point2& next);

/// Mirror line of the fold at `v`: it maps the incoming direction
/// (v - prev) onto the outgoing direction (next - v).
Line fold_line_at(const Point2& prev, const Point2& v, const Point2& next);

Point2 reflect(const Point2& p, const Line& line);

/// Reflects a direction vector (a free vector, not a point).
Vec2 reflect_direction(const Vec2& v, const Line& line);

enum class IntersectionKind { None, Proper, DegenerateOverlap, EndpointTouch };

struct Intersection {
  IntersectionKind kind = IntersectionKind::None;
  Point2 point;
  Scalar param1;  // along s1, in (0,1) for Proper
  Scalar param2;  // along s2
};

/// Transverse interior intersection of two positive-length segments.
Intersection proper_intersection(const Segment& s1, const Segment& s2);

}  // namespace ribbonforge
