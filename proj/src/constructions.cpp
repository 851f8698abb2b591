#include "ribbonforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>

#include "ribbonforge/errors.hpp"
#include "ribbonforge/topology.hpp"
#include "pretzel_layout.hpp"
#include "strand_builder.hpp"

namespace ribbonforge {

Scalar ledger_reference_delta() { return Scalar(1, 64); }

Scalar pythagorean_slope(const Scalar& r) {
  Scalar s = 4 * r / (4 - r * r);
  s.canonicalize();
  return s;
}

namespace detail {

Strand make_strand(Path path, bool closed, bool folds) {
  Strand s;
  s.closed = closed;
  s.vertices.reserve(path.points.size());
  for (auto& p : path.points) s.vertices.push_back({std::move(p)});
  s.layers = std::move(path.layers);
  if (!closed) s.layers.pop_back();
  if (!folds) return s;
  assign_fold_angles(s);
  const std::size_t n = s.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!closed && (i == 0 || i + 1 == n)) continue;
    const int in = s.layers[(i + s.layers.size() - 1) % s.layers.size()];
    const int out = s.layers[i % s.layers.size()];
    s.vertices[i].fold_side = out > in ? FoldSide::FoldInFront : FoldSide::FoldBehind;
  }
  return s;
}

}  // namespace detail

namespace {

using detail::coil_layer;
using detail::make_strand;
using detail::Path;
using detail::default_pretzel_params;
using detail::pretzel_strands;

Scalar half() { return Scalar(1, 2); }

Point2 pt(const Scalar& x, const Scalar& y) { return {x, y}; }

Point2 mirror_y(const Point2& p) { return {p.x, 1 - p.y}; }

void mirror_strand(Strand& s) {
  for (auto& v : s.vertices) v.position = mirror_y(v.position);
  assign_fold_angles(s);
}

Scalar segment_length(const Segment& e) {
  Scalar root;
  if (!rational_sqrt(norm2(e.b - e.a), root)) {
    throw RibbonError(ErrorCode::InvalidDiagram, "construction produced an edge of irrational length");
  }
  return root;
}

Scalar strand_length(const Strand& s) {
  Scalar total = 0;
  for (std::size_t i = 0; i < s.edge_count(); ++i) total += segment_length(s.edge(i));
  return total;
}

int strand_sticks(const Strand& s) {
  int n = 0;
  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    const auto& v = s.vertices[i];
    const bool straight_through = (s.closed || i > 0) && std::abs(v.fold_angle - M_PI) < 1e-12;
    if (!straight_through) ++n;
  }
  if (n == 0 && s.edge_count() > 0) n = 1;  // a closed strand cannot be all straight
  return n;
}

// Offset unit of an exploded layout. `spread` bounds how many units the
// layout stacks side by side, so every delta in range stays inside the
// square.
Scalar slope_for(const LayoutMode& mode, int spread) {
  return mode.exploded ? pythagorean_slope(mode.delta / spread) : Scalar(0);
}

Scalar reference_slope(int spread) { return pythagorean_slope(ledger_reference_delta() / spread); }

using Layout = std::function<std::vector<Strand>(const Scalar& h)>;

RibbonDiagram finish(const Layout& layout, const LayoutMode& mode, const FamilySpec& family, int spread,
                     std::optional<std::vector<CrossingRecord>> ledger = std::nullopt) {
  RibbonDiagram d;
  d.strands = layout(slope_for(mode, spread));
  // Exploded diagrams carry the ledger of their own geometry; tight ones
  // borrow it from the reference explosion.
  if (mode.exploded) {
    d.crossings = ledger_from_layers(d.strands);
  } else {
    d.crossings = ledger ? std::move(*ledger) : ledger_from_layers(layout(reference_slope(spread)));
  }
  d.family = family;
  d.layout = mode;
  return d;
}

// Zigzag of coils starting at `start` (y = 0), moving right by h per coil.
// Coil j (1-based) rises when j is odd. Appends V_1..V_count.
void add_coils(Path& path, int first, int count, const Scalar& h, int front_base, int back_base) {
  for (int j = first; j < first + count; ++j) {
    const Point2 prev = path.last();
    const bool up = j % 2 == 1;
    path.layers.back() = up ? back_base - (j + 1) / 2 : front_base + j / 2;
    path.add(pt(prev.x + h, up ? Scalar(1) : Scalar(0)), 0);
  }
}


}  // namespace

WrapFragment wrap(int n, const LayoutMode& mode) {
  if (n == 0) throw RibbonError(ErrorCode::ParameterError, "wrap needs n != 0; use modified_wrap for n = 0");
  const int m = std::abs(n);
  auto layout = [m](const Scalar& h) {
    const Scalar c = half();
    Path ab;
    ab.add(pt(-half(), half() - h), 1);
    ab.add(pt(c, half() - h), 1);
    ab.add(pt(c, 0), 0);
    add_coils(ab, 1, m - 1, h, 1, 0);
    // Last coil continues half a unit past the square as end B.
    const Point2 v = ab.last();
    const bool up = m % 2 == 1;
    ab.layers.back() = coil_layer(m, 1, 0);
    ab.add(pt(v.x + h * 3 / 2, up ? Scalar(3, 2) : Scalar(-1, 2)), 0);
    Path cd;
    cd.add(pt(-half(), half()), 0);
    cd.add(pt(Scalar(3, 2), half()), 0);
    return std::vector<Strand>{make_strand(ab, false), make_strand(cd, false)};
  };
  auto build = [&](const Scalar& h) {
    auto strands = layout(h);
    if (n < 0) {
      for (auto& s : strands) mirror_strand(s);
    }
    return strands;
  };
  WrapFragment f;
  auto strands = build(slope_for(mode, m + 1));
  f.strand_ab = strands[0];
  f.strand_cd = strands[1];
  f.crossings = ledger_from_layers(build(reference_slope(m + 1)));
  f.twist_count = n;
  // Stubs: A, C and D stick out by 1/2 horizontally; B by 1/2 along the coil.
  const Segment last = f.strand_ab.edge(f.strand_ab.edge_count() - 1);
  f.stub_length = Scalar(3, 2) + segment_length(last) / 3;
  f.interior_length = strand_length(f.strand_ab) + strand_length(f.strand_cd) - f.stub_length;
  f.interior_sticks = strand_sticks(f.strand_ab) + strand_sticks(f.strand_cd);
  return f;
}

WrapFragment modified_wrap(int n, const LayoutMode& mode) {
  const int m = std::abs(n);
  auto layout = [m](const Scalar& h) {
    Path ab;
    Path cd;
    cd.add(pt(-half(), half()), 0);
    cd.add(pt(Scalar(3, 2), half()), 0);
    if (m == 0) {
      ab.add(pt(-half(), half() + h / 2), 1);
      ab.add(pt(Scalar(3, 2), half() + h / 2), 1);
      return std::vector<Strand>{make_strand(ab, false), make_strand(cd, false)};
    }
    ab.add(pt(-half(), half() - h), 1);
    ab.add(pt(half(), half() - h), 1);
    ab.add(pt(half(), 0), 0);
    add_coils(ab, 1, m - 1, h, 1, 0);
    // The last coil stops at the centre line and B turns right by pi/2,
    // in front of D for even m and behind it for odd m.
    const Point2 v = ab.last();
    const Scalar y_m = m % 2 == 1 ? Scalar(half() - h / 2) : Scalar(half() + h / 2);
    ab.layers.back() = coil_layer(m, 1, 0);
    ab.add(pt(v.x + h * abs(y_m - v.y), y_m), m % 2 == 1 ? -100 : 100);
    ab.add(pt(Scalar(3, 2), y_m), 0);
    return std::vector<Strand>{make_strand(ab, false), make_strand(cd, false)};
  };
  auto build = [&](const Scalar& h) {
    auto strands = layout(h);
    if (n < 0) {
      for (auto& s : strands) mirror_strand(s);
    }
    return strands;
  };
  WrapFragment f;
  auto strands = build(slope_for(mode, m + 1));
  f.strand_ab = strands[0];
  f.strand_cd = strands[1];
  f.crossings = ledger_from_layers(build(reference_slope(m + 1)));
  f.twist_count = n;
  f.stub_length = 2;
  f.interior_length = strand_length(f.strand_ab) + strand_length(f.strand_cd) - f.stub_length;
  f.interior_sticks = strand_sticks(f.strand_ab) + strand_sticks(f.strand_cd);
  return f;
}

RibbonDiagram torus_link(int q, const LayoutMode& mode) {
  const auto family = FamilySpec::torus2(q);
  auto layout = [q](const Scalar& h) {
    std::vector<Strand> strands;
    Path p;
    if (q % 2 == 1) {
      // One component: B folds behind and joins C; A folds in front and
      // runs back under the coils to K.
      const Scalar c = half();
      p.add(pt(c, half() - h), 1);
      p.add(pt(c, 0), 0);
      add_coils(p, 1, q - 1, h, 1, 0);
      const Scalar x_m = p.last().x;
      p.layers.back() = coil_layer(q, 1, 0);
      p.add(pt(x_m, half() - h * x_m), -100);
      p.add(pt(0, half()), 0);
      p.add(pt(1, half()), 100);
      p.add(pt(0, half() - h), 1);
      strands.push_back(make_strand(p, true));
    } else {
      // Two components: A and B are joined; C and D are joined behind.
      const Scalar c = half() + h / 4;
      const Scalar y_k = half() - 2 * h;
      p.add(pt(c, y_k), 1);
      p.add(pt(c, 0), 0);
      add_coils(p, 1, q - 1, h, 1, 0);
      const Scalar x_m = p.last().x;
      p.layers.back() = coil_layer(q, 1, 0);
      p.add(pt(x_m, y_k + h * x_m), 100);
      p.add(pt(0, y_k), 1);
      strands.push_back(make_strand(p, true));
      Path cd;
      cd.add(pt(0, half()), 0);
      cd.add(pt(1, half()), -100);
      cd.add(pt(half(), half() - h / 2), -100);
      strands.push_back(make_strand(cd, true));
    }
    return strands;
  };
  return finish(layout, mode, family, q + 1);
}

RibbonDiagram hopf_link(const LayoutMode& mode) {
  auto layout = [](const Scalar& h) {
    // Two doubled unit segments overlapping by half; each loop hooks the
    // other's fold.
    Path a;
    a.add(pt(0, half()), 2);
    a.add(pt(1, half()), 2);
    a.add(pt(half(), half() - h / 2), 2);
    Path b;
    b.add(pt(half(), half() - h / 4), 3);
    b.add(pt(Scalar(3, 2), half() - h / 4), 3);
    b.add(pt(1, half() - 3 * h / 4), 1);
    return std::vector<Strand>{make_strand(a, true), make_strand(b, true)};
  };
  return finish(layout, mode, FamilySpec::hopf(), 1);
}

RibbonDiagram pentagon_trefoil() {
  // Star order on a circle; every vertex angle t is encoded through a
  // rational tan(t/4), which keeps all edge lengths rational.
  const double pi = M_PI;
  const double cot = 1.0 / std::tan(pi / 5);
  const Scalar radius(cot / (2 * std::sin(2 * pi / 5)));
  static const int kLayers[5] = {4, 2, 0, 3, 1};
  Path p;
  for (int j = 0; j < 5; ++j) {
    const double theta = pi / 2 + j * 4 * pi / 5;
    const Scalar t(std::tan(theta / 4));
    const Scalar d = (1 + t * t) * (1 + t * t);
    const Scalar cos_t = ((1 - t * t) * (1 - t * t) - 4 * t * t) / d;
    const Scalar sin_t = 4 * t * (1 - t * t) / d;
    p.add(pt(radius * cos_t, radius * sin_t), kLayers[j]);
  }
  std::vector<Strand> strands{make_strand(p, true)};
  RibbonDiagram d;
  d.strands = strands;
  d.crossings = ledger_from_layers(strands);
  d.family = FamilySpec::pentagon_trefoil();
  d.analytic_ribbonlength = 5 * cot;
  d.analytic_expression = "5*cot(pi/5)";
  validate(d);
  return d;
}

RibbonDiagram twist_knot(int n, const LayoutMode& mode) {
  const auto family = FamilySpec::twist(n);
  auto layout = [n](const Scalar& h) {
    const bool even = n % 2 == 0;
    // Even n folds A, B, C over the front and D behind; odd n mirrors
    // the stacking, with C folded first and A outermost.
    const int z = even ? 1 : -1;
    const Scalar h2 = pythagorean_slope(h / 2);
    const Scalar g = pythagorean_slope(3 * h);
    const Scalar x_lc = even ? Scalar(-h) : Scalar(0);
    const Scalar x_la = even ? Scalar(0) : Scalar(-h);
    const Point2 lc = pt(x_lc, half());
    const Point2 rj = pt(1, half() + h * (1 - x_lc));
    const Point2 la = pt(x_la, rj.y - g * (1 - x_la));
    Path p;
    p.add(pt(half(), la.y), 1);
    p.add(pt(half(), 0), 0);
    add_coils(p, 1, n - 1, h, 1, 0);
    const Point2 vn = pt(p.last().x + h, even ? Scalar(0) : Scalar(1));
    p.layers.back() = coil_layer(n, 1, 0);
    p.add(vn, 200 * z);
    // B turns back across the square and meets D beyond the coil folds.
    const Scalar ty = even ? Scalar(1 + h) : Scalar(-h);
    const Point2 t = pt(vn.x - h2 * abs(ty - vn.y), ty);
    p.add(t, -200 * z);
    p.add(pt(t.x, half() + h * (1 - t.x)), -100 * z);
    p.add(pt(1, half()), 0);
    p.add(lc, even ? 300 : -100);
    p.add(rj, even ? 100 : -300);
    p.add(la, 1);
    return std::vector<Strand>{make_strand(p, true)};
  };
  return finish(layout, mode, family, n + 3);
}

namespace {

// First placement whose reference geometry, and the requested one when
// exploded, is generic. Returns the reference ledger.
std::pair<detail::PretzelParams, std::vector<CrossingRecord>> generic_pretzel_params(const std::vector<int>& twists,
                                                                                     const Scalar& h_ref,
                                                                                     const Scalar& h_mode) {
  constexpr int kSalts = 6;
  for (int salt = 0;; ++salt) {
    auto params = default_pretzel_params(twists, salt);
    try {
      auto ledger = ledger_from_layers(pretzel_strands(twists, params, h_ref, false));
      if (h_mode != 0 && h_mode != h_ref) ledger_from_layers(pretzel_strands(twists, params, h_mode, false));
      return {std::move(params), std::move(ledger)};
    } catch (const RibbonError& e) {
      if (e.code() != ErrorCode::GenericityError || salt + 1 == kSalts) throw;
    }
  }
}

}  // namespace

RibbonDiagram pretzel(const std::vector<int>& twists, const LayoutMode& mode) {
  const auto family = FamilySpec::pretzel(twists);
  int spread = static_cast<int>(twists.size());
  for (int t : twists) spread += std::abs(t) + 1;
  auto [params, ledger] = generic_pretzel_params(twists, reference_slope(spread), slope_for(mode, spread));
  auto layout = [&, &params = params](const Scalar& h) { return pretzel_strands(twists, params, h); };
  return finish(layout, mode, family, spread, std::move(ledger));
}

RibbonDiagram build_family(const FamilySpec& f, const LayoutMode& mode) {
  switch (f.kind) {
    case FamilyKind::Torus2:
      return torus_link(f.param, mode);
    case FamilyKind::Twist:
      return twist_knot(f.param, mode);
    case FamilyKind::Pretzel:
      return pretzel(f.twists, mode);
    case FamilyKind::Hopf:
      return hopf_link(mode);
    case FamilyKind::PentagonTrefoil:
      return pentagon_trefoil();
    case FamilyKind::Unknot:
      break;
  }
  throw RibbonError(ErrorCode::ParameterError, "no ribbon construction for " + to_string(f));
}

}  // namespace ribbonforge
