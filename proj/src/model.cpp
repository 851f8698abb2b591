#include "ribbonforge/model.hpp"

#include <cmath>
#include <sstream>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

FamilySpec FamilySpec::torus2(int q) {
  if (q < 2) throw RibbonError(ErrorCode::ParameterError, "torus2 requires q >= 2");
  return {FamilyKind::Torus2, q, {}};
}

FamilySpec FamilySpec::twist(int n) {
  if (n < 1) throw RibbonError(ErrorCode::ParameterError, "twist requires n >= 1");
  return {FamilyKind::Twist, n, {}};
}

FamilySpec FamilySpec::pretzel(std::vector<int> twists) {
  if (twists.size() < 3) {
    throw RibbonError(ErrorCode::ParameterError, "pretzel requires at least 3 strands");
  }
  return {FamilyKind::Pretzel, 0, std::move(twists)};
}

std::string to_string(const FamilySpec& f) {
  std::ostringstream os;
  switch (f.kind) {
    case FamilyKind::Torus2: os << "torus2(" << f.param << ")"; break;
    case FamilyKind::Twist: os << "twist(" << f.param << ")"; break;
    case FamilyKind::Pretzel:
      os << "pretzel(";
      for (std::size_t i = 0; i < f.twists.size(); ++i) os << (i ? "," : "") << f.twists[i];
      os << ")";
      break;
    case FamilyKind::Unknot: os << "unknot"; break;
    case FamilyKind::Hopf: os << "hopf"; break;
    case FamilyKind::PentagonTrefoil: os << "pentagon_trefoil"; break;
  }
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw RibbonError(ErrorCode::FormatError, "bad integer '" + item + "'");
    }
    if (used != item.size()) throw RibbonError(ErrorCode::FormatError, "bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  if (text == "unknot") return FamilySpec::unknot();
  if (text == "hopf") return FamilySpec::hopf();
  if (text == "pentagon_trefoil") return FamilySpec::pentagon_trefoil();
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw RibbonError(ErrorCode::FormatError, "unknown family '" + text + "'");
  }
  const std::string name = text.substr(0, open);
  const auto args = parse_int_list(text.substr(open + 1, text.size() - open - 2));
  if (name == "torus2" && args.size() == 1) return FamilySpec::torus2(args[0]);
  if (name == "twist" && args.size() == 1) return FamilySpec::twist(args[0]);
  if (name == "pretzel") return FamilySpec::pretzel(args);
  throw RibbonError(ErrorCode::FormatError, "unknown family '" + text + "'");
}

LayoutMode LayoutMode::make_exploded(const Scalar& delta) {
  if (delta <= 0 || delta >= Scalar(1, 8)) {
    throw RibbonError(ErrorCode::ParameterError, "exploded delta must lie in (0, 1/8)");
  }
  return {true, delta};
}

void assign_fold_angles(Strand& s) {
  const std::size_t n = s.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool interior = s.closed || (i > 0 && i + 1 < n);
    if (!interior || n < 2) {
      s.vertices[i].fold_angle = M_PI;
      continue;
    }
    const Point2& prev = s.vertices[(i + n - 1) % n].position;
    const Point2& next = s.vertices[(i + 1) % n].position;
    s.vertices[i].fold_angle = fold_angle_at(prev, s.vertices[i].position, next);
  }
}

std::size_t check_fold_mirror(const Strand& s) {
  const std::size_t n = s.vertices.size();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.closed && (i == 0 || i + 1 == n)) continue;
    const Point2& prev = s.vertices[(i + n - 1) % n].position;
    const Point2& v = s.vertices[i].position;
    const Point2& next = s.vertices[(i + 1) % n].position;
    const Vec2 in = v - prev;
    const Vec2 out = next - v;
    if (cross(in, out) == 0 && dot(in, out) > 0) continue;  // straight through
    const Line line = fold_line_at(prev, v, next);
    const Vec2 image = reflect_direction(in, line);
    bool ok;
    if (line.exact) {
      ok = cross(image, out) == 0 && dot(image, out) > 0;
    } else {
      const double c = to_double(cross(image, out));
      const double scale = std::sqrt(to_double(norm2(image)) * to_double(norm2(out)));
      ok = std::fabs(c) <= 1e-9 * scale && to_double(dot(image, out)) > 0;
    }
    if (!ok) {
      throw RibbonError(ErrorCode::InvalidDiagram,
                        "fold-mirror property fails at vertex " + std::to_string(i));
    }
    ++checked;
  }
  return checked;
}

namespace {

void check_ref(const RibbonDiagram& d, const EdgeRef& r, const char* which, int id) {
  if (r.strand >= d.strands.size() || r.edge >= d.strands[r.strand].edge_count()) {
    throw RibbonError(ErrorCode::LedgerError,
                      std::string(which) + " reference of crossing " + std::to_string(id) +
                          " points at a missing edge");
  }
  if (r.param <= 0 || r.param >= 1) {
    throw RibbonError(ErrorCode::LedgerError,
                      std::string(which) + " parameter of crossing " + std::to_string(id) +
                          " is outside (0,1)");
  }
}

}  // namespace

void validate(const RibbonDiagram& d) {
  if (d.width <= 0) throw RibbonError(ErrorCode::InvalidDiagram, "width must be positive");
  if (d.strands.empty()) throw RibbonError(ErrorCode::EmptyDiagram, "diagram has no strands");
  for (std::size_t si = 0; si < d.strands.size(); ++si) {
    const Strand& s = d.strands[si];
    const std::size_t n = s.vertices.size();
    if (n < 2) throw RibbonError(ErrorCode::InvalidDiagram, "strand with fewer than 2 vertices");
    if (s.layers.size() != s.edge_count()) {
      throw RibbonError(ErrorCode::InvalidDiagram, "layer count differs from edge count");
    }
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
      const Segment seg = s.edge(e);
      if (seg.a == seg.b) {
        throw RibbonError(ErrorCode::InvalidDiagram,
                          "strand " + std::to_string(si) + " has coincident consecutive vertices");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double a = s.vertices[i].fold_angle;
      if (!(a >= 0.0 && a <= M_PI)) {
        throw RibbonError(ErrorCode::InvalidDiagram, "fold angle outside [0, pi]");
      }
      const bool interior = s.closed || (i > 0 && i + 1 < n);
      if (!interior) continue;
      const double geometric = fold_angle_at(s.vertices[(i + n - 1) % n].position,
                                             s.vertices[i].position, s.vertices[(i + 1) % n].position);
      if (std::fabs(geometric - a) > 1e-9) {
        throw RibbonError(ErrorCode::InvalidDiagram,
                          "stored fold angle disagrees with geometry at strand " +
                              std::to_string(si) + " vertex " + std::to_string(i));
      }
    }
  }
  for (const auto& c : d.crossings) {
    check_ref(d, c.over, "over", c.id);
    check_ref(d, c.under, "under", c.id);
    if (c.over.strand == c.under.strand && c.over.edge == c.under.edge) {
      throw RibbonError(ErrorCode::LedgerError,
                        "crossing " + std::to_string(c.id) + " crosses an edge with itself");
    }
    if (c.sign != 1 && c.sign != -1) {
      throw RibbonError(ErrorCode::LedgerError, "crossing sign must be +1 or -1");
    }
  }
}

}  // namespace ribbonforge
