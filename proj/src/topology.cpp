#include "ribbonforge/topology.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

struct GeoCrossing {
  std::size_t s1, e1, s2, e2;
  Scalar t1, t2;
  int turn;  // sign of cross(direction of e1, direction of e2)
};

bool adjacent(const Strand& s, std::size_t a, std::size_t b) {
  const std::size_t n = s.edge_count();
  if (a + 1 == b || b + 1 == a) return true;
  return s.closed && n > 1 && ((a == 0 && b == n - 1) || (b == 0 && a == n - 1));
}

std::string edge_name(std::size_t s, std::size_t e) {
  return "strand " + std::to_string(s) + " edge " + std::to_string(e);
}

// Integer image of the whole diagram: every coordinate times a common
// denominator. Small enough images let crossings be found with exact
// 128-bit arithmetic instead of rationals.
struct IntPoint {
  std::int64_t x, y;
};

using Wide = __int128;

std::optional<std::vector<std::vector<IntPoint>>> integer_image(const std::vector<Strand>& strands) {
  mpz_class den = 1;
  for (const auto& s : strands) {
    for (const auto& v : s.vertices) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.position.x.get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.position.y.get_den_mpz_t());
    }
  }
  // Differences then stay below 2^31, cross products below 2^63 and
  // products of two of those inside a signed 128-bit word.
  const mpz_class bound = mpz_class(1) << 29;
  mpz_class scratch;
  std::vector<std::vector<IntPoint>> out(strands.size());
  for (std::size_t i = 0; i < strands.size(); ++i) {
    for (const auto& v : strands[i].vertices) {
      std::int64_t c[2];
      for (int k = 0; k < 2; ++k) {
        const Scalar& q = k == 0 ? v.position.x : v.position.y;
        mpz_divexact(scratch.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        scratch *= q.get_num();
        if (mpz_cmpabs(scratch.get_mpz_t(), bound.get_mpz_t()) >= 0) return std::nullopt;
        c[k] = scratch.get_si();
      }
      out[i].push_back({c[0], c[1]});
    }
  }
  return out;
}

Wide cross_wide(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return Wide(ax) * by - Wide(ay) * bx;
}

enum class Quick { Miss, Proper, Touch, Exact };

// Classifies a pair of edges on the integer image. Proper crossings get
// their parameters as fractions; touching and parallel cases go to the
// rational routine.
Quick quick_intersect(IntPoint a, IntPoint b, IntPoint c, IntPoint d, std::int64_t& tn, std::int64_t& un,
                      std::int64_t& den, int& turn) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return Quick::Miss;
  }
  const std::int64_t rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const std::int64_t qx = c.x - a.x, qy = c.y - a.y;
  Wide dn = cross_wide(rx, ry, sx, sy);
  Wide t = cross_wide(qx, qy, sx, sy);
  Wide u = cross_wide(qx, qy, rx, ry);
  if (dn == 0) return u != 0 ? Quick::Miss : Quick::Exact;
  turn = dn > 0 ? 1 : -1;
  if (dn < 0) {
    dn = -dn;
    t = -t;
    u = -u;
  }
  if (t < 0 || t > dn || u < 0 || u > dn) return Quick::Miss;
  if (t == 0 || t == dn || u == 0 || u == dn) return Quick::Touch;
  tn = static_cast<std::int64_t>(t);
  un = static_cast<std::int64_t>(u);
  den = static_cast<std::int64_t>(dn);
  return Quick::Proper;
}

Scalar fraction(std::int64_t num, std::int64_t den) {
  Scalar q;
  mpq_set_si(q.get_mpq_t(), static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

std::vector<GeoCrossing> geometric_crossings(const std::vector<Strand>& strands) {
  std::vector<GeoCrossing> out;
  const auto image = integer_image(strands);
  for (std::size_t s1 = 0; s1 < strands.size(); ++s1) {
    const std::size_t n1 = strands[s1].vertices.size();
    for (std::size_t e1 = 0; e1 < strands[s1].edge_count(); ++e1) {
      for (std::size_t s2 = s1; s2 < strands.size(); ++s2) {
        const std::size_t n2 = strands[s2].vertices.size();
        for (std::size_t e2 = (s2 == s1 ? e1 + 1 : 0); e2 < strands[s2].edge_count(); ++e2) {
          const bool adj = s1 == s2 && adjacent(strands[s1], e1, e2);
          std::int64_t tn = 0, un = 0, den = 1;
          int turn = 0;
          const Quick quick = image ? quick_intersect((*image)[s1][e1], (*image)[s1][(e1 + 1) % n1],
                                                      (*image)[s2][e2], (*image)[s2][(e2 + 1) % n2], tn, un, den, turn)
                                    : Quick::Exact;
          if (quick == Quick::Miss) continue;
          // Non-parallel neighbours can only meet at their shared vertex.
          if (quick == Quick::Touch && adj) continue;
          Intersection hit;
          if (quick == Quick::Proper) {
            hit.kind = IntersectionKind::Proper;
            hit.param1 = fraction(tn, den);
            hit.param2 = fraction(un, den);
          } else {
            hit = proper_intersection(strands[s1].edge(e1), strands[s2].edge(e2));
          }
          if (hit.kind == IntersectionKind::None) continue;
          if (hit.kind == IntersectionKind::DegenerateOverlap) {
            throw RibbonError(ErrorCode::GenericityError,
                              edge_name(s1, e1) + " overlaps " + edge_name(s2, e2));
          }
          if (hit.kind == IntersectionKind::EndpointTouch) {
            if (adj) continue;
            throw RibbonError(ErrorCode::GenericityError,
                              edge_name(s1, e1) + " touches " + edge_name(s2, e2) + " at an endpoint");
          }
          if (adj) {
            throw RibbonError(ErrorCode::GenericityError, "adjacent edges cross");
          }
          if (turn == 0) {
            const Segment a = strands[s1].edge(e1), b = strands[s2].edge(e2);
            turn = cross(a.b - a.a, b.b - b.a) > 0 ? 1 : -1;
          }
          out.push_back({s1, e1, s2, e2, hit.param1, hit.param2, turn});
        }
      }
    }
  }
  // Crossings are interior to both edges, so two of them share a point
  // exactly when some edge meets both at the same parameter.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const Scalar*>> along;
  for (const auto& g : out) {
    along[{g.s1, g.e1}].push_back(&g.t1);
    along[{g.s2, g.e2}].push_back(&g.t2);
  }
  for (auto& [edge, params] : along) {
    std::sort(params.begin(), params.end(), [](const Scalar* a, const Scalar* b) { return *a < *b; });
    for (std::size_t i = 1; i < params.size(); ++i) {
      if (*params[i] == *params[i - 1]) {
        throw RibbonError(ErrorCode::GenericityError,
                          "two crossings coincide at " + edge_name(edge.first, edge.second));
      }
    }
  }
  return out;
}

struct Event {
  std::size_t edge;
  Scalar param;
  int crossing;
  bool over;
};

PDCode pd_from_events(const std::vector<Strand>& strands, std::vector<std::vector<Event>> events,
                      const std::vector<int>& signs) {
  std::vector<std::vector<WalkEvent>> walks;
  for (std::size_t s = 0; s < strands.size(); ++s) {
    if (!strands[s].closed) {
      throw RibbonError(ErrorCode::InvalidDiagram, "PD codes need closed strands");
    }
    auto& ev = events[s];
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
      return a.edge < b.edge || (a.edge == b.edge && a.param < b.param);
    });
    for (std::size_t i = 1; i < ev.size(); ++i) {
      if (ev[i].edge == ev[i - 1].edge && ev[i].param == ev[i - 1].param) {
        throw RibbonError(ErrorCode::LedgerError,
                          "two crossings declared at the same point of " + edge_name(s, ev[i].edge));
      }
    }
    std::vector<WalkEvent> walk;
    for (const auto& e : ev) walk.push_back({e.crossing, e.over});
    walks.push_back(std::move(walk));
  }
  return build_pd(walks, signs);
}

std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> edge_pair(
    const EdgeRef& a, const EdgeRef& b) {
  auto x = std::make_pair(a.strand, a.edge);
  auto y = std::make_pair(b.strand, b.edge);
  if (y < x) std::swap(x, y);
  return {x, y};
}

}  // namespace

std::vector<CrossingRecord> ledger_from_layers(const std::vector<Strand>& strands) {
  std::vector<CrossingRecord> ledger;
  auto geo = geometric_crossings(strands);
  ledger.reserve(geo.size());
  int id = 0;
  for (auto& g : geo) {
    const int l1 = strands[g.s1].layers.at(g.e1);
    const int l2 = strands[g.s2].layers.at(g.e2);
    if (l1 == l2) {
      throw RibbonError(ErrorCode::LedgerError,
                        edge_name(g.s1, g.e1) + " and " + edge_name(g.s2, g.e2) + " cross on the same layer");
    }
    EdgeRef r1{g.s1, g.e1, std::move(g.t1)};
    EdgeRef r2{g.s2, g.e2, std::move(g.t2)};
    CrossingRecord rec;
    rec.id = id++;
    rec.over = std::move(l1 > l2 ? r1 : r2);
    rec.under = std::move(l1 > l2 ? r2 : r1);
    rec.sign = l1 > l2 ? g.turn : -g.turn;
    ledger.push_back(std::move(rec));
  }
  return ledger;
}

PDCode declared_pd(const RibbonDiagram& d) {
  validate(d);
  std::vector<std::vector<Event>> events(d.strands.size());
  std::vector<int> signs;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    events[c.over.strand].push_back({c.over.edge, c.over.param, static_cast<int>(i), true});
    events[c.under.strand].push_back({c.under.edge, c.under.param, static_cast<int>(i), false});
    signs.push_back(c.sign);
  }
  return pd_from_events(d.strands, std::move(events), signs);
}

PDCode extract_pd(const RibbonDiagram& d) {
  validate(d);
  const auto geo = geometric_crossings(d.strands);
  std::map<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>, std::size_t>
      by_pair;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto key = edge_pair(d.crossings[i].over, d.crossings[i].under);
    if (!by_pair.emplace(key, i).second) {
      throw RibbonError(ErrorCode::LedgerError, "two ledger crossings on the same edge pair");
    }
  }
  if (geo.size() != d.crossings.size()) {
    throw RibbonError(ErrorCode::LedgerError,
                      "geometry has " + std::to_string(geo.size()) + " crossings, ledger has " +
                          std::to_string(d.crossings.size()));
  }
  std::vector<std::vector<Event>> events(d.strands.size());
  std::vector<int> signs;
  for (std::size_t k = 0; k < geo.size(); ++k) {
    const auto& g = geo[k];
    EdgeRef r1{g.s1, g.e1, std::move(g.t1)};
    EdgeRef r2{g.s2, g.e2, std::move(g.t2)};
    auto it = by_pair.find(edge_pair(r1, r2));
    if (it == by_pair.end()) {
      throw RibbonError(ErrorCode::LedgerError, edge_name(g.s1, g.e1) + " crosses " +
                                                    edge_name(g.s2, g.e2) + " but the ledger has no entry");
    }
    const auto& rec = d.crossings[it->second];
    const bool first_over = rec.over.strand == g.s1 && rec.over.edge == g.e1;
    const EdgeRef& over = first_over ? r1 : r2;
    const EdgeRef& under = first_over ? r2 : r1;
    events[over.strand].push_back({over.edge, over.param, static_cast<int>(k), true});
    events[under.strand].push_back({under.edge, under.param, static_cast<int>(k), false});
    signs.push_back(first_over ? g.turn : -g.turn);
  }
  return pd_from_events(d.strands, std::move(events), signs);
}

namespace {

// Port graph used to assemble the reference diagrams. A crossing has
// ports 0..3 counterclockwise from south-west (SW, SE, NE, NW); the
// strands pass 0<->2 ("/") and 1<->3 ("\").
struct PortGraph {
  struct Node {
    int crossing = -1;  // -1 for a pass-through node
    int port = 0;
    int twin = -1;      // pass-through partner
    int link = -1;      // node at the other end of the diagram edge
  };
  std::vector<Node> nodes;
  std::vector<std::array<int, 4>> ports;  // node id per crossing port
  std::vector<int> slash_over;            // 1 when the "/" strand is over

  int add_crossing(bool slash_on_top) {
    const int c = static_cast<int>(ports.size());
    std::array<int, 4> ids{};
    for (int p = 0; p < 4; ++p) {
      ids[static_cast<std::size_t>(p)] = static_cast<int>(nodes.size());
      nodes.push_back({c, p, -1, -1});
    }
    ports.push_back(ids);
    slash_over.push_back(slash_on_top ? 1 : 0);
    return c;
  }
  std::pair<int, int> add_pass_through() {
    const int a = static_cast<int>(nodes.size());
    nodes.push_back({-1, 0, a + 1, -1});
    nodes.push_back({-1, 0, a, -1});
    return {a, a + 1};
  }
  void connect(int a, int b) {
    nodes[static_cast<std::size_t>(a)].link = b;
    nodes[static_cast<std::size_t>(b)].link = a;
  }
};

struct Box {
  int tl, tr, bl, br;
};

// A vertical column of |n| crossings; positive n puts "/" on top.
Box twist_column(PortGraph& g, int n) {
  if (n == 0) {
    auto [l_top, l_bottom] = g.add_pass_through();
    auto [r_top, r_bottom] = g.add_pass_through();
    return {l_top, r_top, l_bottom, r_bottom};
  }
  const int count = n > 0 ? n : -n;
  int first = -1, last = -1;
  for (int k = 0; k < count; ++k) {
    const int c = g.add_crossing(n > 0);
    if (k == 0) first = c;
    if (last >= 0) {
      g.connect(g.ports[static_cast<std::size_t>(last)][0], g.ports[static_cast<std::size_t>(c)][3]);
      g.connect(g.ports[static_cast<std::size_t>(last)][1], g.ports[static_cast<std::size_t>(c)][2]);
    }
    last = c;
  }
  const auto& top = g.ports[static_cast<std::size_t>(first)];
  const auto& bottom = g.ports[static_cast<std::size_t>(last)];
  return {top[3], top[2], bottom[0], bottom[1]};
}

// Unit port directions (SW, SE, NE, NW) scaled to integers.
constexpr std::array<std::array<int, 2>, 4> kPortDir{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};

PDCode pd_from_port_graph(const PortGraph& g) {
  const std::size_t nx = g.ports.size();
  std::vector<int> signs(nx, 0);
  std::vector<std::vector<WalkEvent>> walks;
  std::vector<bool> visited(g.nodes.size(), false);
  auto follow = [&](int node) {
    // Leave through `node` and return the crossing port we arrive at.
    int cur = g.nodes[static_cast<std::size_t>(node)].link;
    while (g.nodes[static_cast<std::size_t>(cur)].crossing < 0) {
      visited[static_cast<std::size_t>(cur)] = true;
      const int twin = g.nodes[static_cast<std::size_t>(cur)].twin;
      visited[static_cast<std::size_t>(twin)] = true;
      cur = g.nodes[static_cast<std::size_t>(twin)].link;
      if (cur == node) break;
    }
    return cur;
  };
  // Travel direction entering at port p is the direction of port p+2.
  std::vector<std::array<int, 2>> over_dir(nx), under_dir(nx);
  for (std::size_t c = 0; c < nx; ++c) {
    for (int start_port = 0; start_port < 4; ++start_port) {
      const int start = g.ports[c][static_cast<std::size_t>(start_port)];
      if (visited[static_cast<std::size_t>(start)]) continue;
      std::vector<WalkEvent> walk;
      int entry = start;
      while (true) {
        const auto& n = g.nodes[static_cast<std::size_t>(entry)];
        const int exit_port = (n.port + 2) % 4;
        const int exit = g.ports[static_cast<std::size_t>(n.crossing)][static_cast<std::size_t>(exit_port)];
        visited[static_cast<std::size_t>(entry)] = true;
        visited[static_cast<std::size_t>(exit)] = true;
        const bool on_slash = n.port % 2 == 0;
        const bool over = on_slash == (g.slash_over[static_cast<std::size_t>(n.crossing)] == 1);
        walk.push_back({n.crossing, over});
        (over ? over_dir : under_dir)[static_cast<std::size_t>(n.crossing)] =
            kPortDir[static_cast<std::size_t>(exit_port)];
        entry = follow(exit);
        if (entry == start) break;
      }
      walks.push_back(std::move(walk));
    }
  }
  for (std::size_t c = 0; c < nx; ++c) {
    const auto& o = over_dir[c];
    const auto& u = under_dir[c];
    signs[c] = (o[0] * u[1] - o[1] * u[0]) > 0 ? 1 : -1;
  }
  // Pass-through loops never reach a crossing.
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (visited[i]) continue;
    int cur = static_cast<int>(i);
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      const int twin = g.nodes[static_cast<std::size_t>(cur)].twin;
      visited[static_cast<std::size_t>(twin)] = true;
      cur = g.nodes[static_cast<std::size_t>(twin)].link;
    }
    walks.emplace_back();
  }
  return build_pd(walks, signs);
}

PDCode pretzel_reference(const std::vector<int>& twists) {
  PortGraph g;
  std::vector<Box> boxes;
  for (int t : twists) boxes.push_back(twist_column(g, t));
  const std::size_t k = boxes.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    g.connect(boxes[i].tr, boxes[i + 1].tl);
    g.connect(boxes[i].br, boxes[i + 1].bl);
  }
  g.connect(boxes[0].tl, boxes[k - 1].tr);
  g.connect(boxes[0].bl, boxes[k - 1].br);
  return pd_from_port_graph(g);
}

}  // namespace

PDCode reference_pd(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::Unknot: {
      PDCode pd;
      pd.free_loops = 1;
      return pd;
    }
    case FamilyKind::Hopf: return pretzel_reference({1, 1});
    case FamilyKind::Torus2: {
      if (f.param < 2) throw RibbonError(ErrorCode::ParameterError, "torus2 requires q >= 2");
      return pretzel_reference(std::vector<int>(static_cast<std::size_t>(f.param), 1));
    }
    case FamilyKind::Twist: {
      if (f.param < 1) throw RibbonError(ErrorCode::ParameterError, "twist requires n >= 1");
      return pretzel_reference({f.param, 1, 1});
    }
    case FamilyKind::Pretzel: {
      if (f.twists.size() < 3) throw RibbonError(ErrorCode::ParameterError, "pretzel needs >= 3 strands");
      return pretzel_reference(f.twists);
    }
    case FamilyKind::PentagonTrefoil:
      throw RibbonError(ErrorCode::ParameterError,
                        "the pentagon trefoil has no reference diagram of its own; use torus2(3)");
  }
  throw RibbonError(ErrorCode::ParameterError, "unknown family");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::MirrorVerified: return "MirrorVerified";
    case Verdict::Failed: return "Failed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::set<LaurentPolynomial> jones_set(const PDCode& pd, int limit) {
  std::set<LaurentPolynomial> out;
  for (const auto& o : orientation_orbit(pd)) out.insert(jones_in_A(pd, o, limit));
  return out;
}

}  // namespace

TypeCheck same_type(const PDCode& pd, const FamilySpec& f, int limit) {
  TypeCheck result;
  const FamilySpec target =
      f.kind == FamilyKind::PentagonTrefoil ? FamilySpec::torus2(3) : f;
  const PDCode ref = reference_pd(target);
  std::ostringstream diag;
  const int n = static_cast<int>(pd.crossings.size());
  if (n > limit || static_cast<int>(ref.crossings.size()) > limit) {
    diag << "diagram has " << n << " crossings, above the bracket limit " << limit;
    result.verdict = Verdict::Inconclusive;
    result.diagnostics = diag.str();
    return result;
  }
  const int comps = components(pd);
  const int ref_comps = components(ref);
  diag << "components " << comps << " (expected " << ref_comps << ")";
  if (comps != ref_comps) {
    result.verdict = Verdict::Failed;
    result.diagnostics = diag.str();
    return result;
  }
  if (comps == 2) {
    const int lk = std::abs(linking_number(pd, orientation_orbit(pd).front()));
    const int ref_lk = std::abs(linking_number(ref, orientation_orbit(ref).front()));
    diag << "; |Lk| " << lk << " (expected " << ref_lk << ")";
    if (lk != ref_lk) {
      result.verdict = Verdict::Failed;
      result.diagnostics = diag.str();
      return result;
    }
  }
  const auto mine = jones_set(pd, limit);
  const auto theirs = jones_set(ref, limit);
  std::set<LaurentPolynomial> mirrored;
  for (const auto& p : theirs) mirrored.insert(p.mirror());
  diag << "; jones " << mine.begin()->to_string();
  if (mine == theirs) {
    result.verdict = Verdict::Verified;
  } else if (mine == mirrored) {
    result.verdict = Verdict::MirrorVerified;
  } else {
    diag << " (expected " << theirs.begin()->to_string() << " or its mirror)";
    result.verdict = Verdict::Failed;
  }
  result.diagnostics = diag.str();
  return result;
}

TypeCheck same_type(const RibbonDiagram& d, const FamilySpec& f, int limit) {
  return same_type(declared_pd(d), f, limit);
}

}  // namespace ribbonforge
