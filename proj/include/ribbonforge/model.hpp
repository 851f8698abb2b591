#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/geometry.hpp"
#include "ribbonforge/scalar.hpp"

namespace ribbonforge {

/// Which ribbon layer ends up on top after the fold.
enum class FoldSide { FoldInFront, FoldBehind };

struct FoldVertex {
  Point2 position;
  double fold_angle = M_PI;  // pi: no fold
  FoldSide fold_side = FoldSide::FoldInFront;
};

/// One link component's centerline. `layers[i]` is the stacking height
/// of edge i (larger is closer to the viewer).
struct Strand {
  std::vector<FoldVertex> vertices;
  bool closed = true;
  std::vector<int> layers;

  std::size_t edge_count() const {
    if (vertices.size() < 2) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
  }
  Segment edge(std::size_t i) const {
    return {vertices[i].position, vertices[(i + 1) % vertices.size()].position};
  }
};

struct EdgeRef {
  std::size_t strand = 0;
  std::size_t edge = 0;
  Scalar param;  // position along the edge, in (0,1)

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.strand == b.strand && a.edge == b.edge && a.param == b.param;
  }
};

/// A declared crossing. `sign` is +1 when the crossing is right-handed
/// with both strands oriented along their vertex order.
struct CrossingRecord {
  int id = 0;
  EdgeRef over;
  EdgeRef under;
  int sign = 1;

  friend bool operator==(const CrossingRecord& a, const CrossingRecord& b) {
    return a.id == b.id && a.over == b.over && a.under == b.under && a.sign == b.sign;
  }
};

enum class FamilyKind { Torus2, Twist, Pretzel, Unknot, Hopf, PentagonTrefoil };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Unknot;
  int param = 0;            // q for Torus2, n for Twist
  std::vector<int> twists;  // Pretzel entries

  static FamilySpec torus2(int q);
  static FamilySpec twist(int n);
  static FamilySpec pretzel(std::vector<int> twists);
  static FamilySpec unknot() { return {}; }
  static FamilySpec hopf() { return {FamilyKind::Hopf, 0, {}}; }
  static FamilySpec pentagon_trefoil() { return {FamilyKind::PentagonTrefoil, 0, {}}; }

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.kind == b.kind && a.param == b.param && a.twists == b.twists;
  }
};

/// Canonical text form: "torus2(5)", "twist(2)", "pretzel(3,1,-2)",
/// "unknot", "hopf", "pentagon_trefoil".
std::string to_string(const FamilySpec& f);
FamilySpec parse_family(const std::string& text);

struct LayoutMode {
  bool exploded = false;
  Scalar delta;  // 0 < delta < 1/8 when exploded

  static LayoutMode tight() { return {}; }
  static LayoutMode make_exploded(const Scalar& delta);

  friend bool operator==(const LayoutMode& a, const LayoutMode& b) {
    return a.exploded == b.exploded && (!a.exploded || a.delta == b.delta);
  }
};

/// The folded ribbon link L_w.
struct RibbonDiagram {
  std::vector<Strand> strands;
  Scalar width{1};
  std::vector<CrossingRecord> crossings;
  std::optional<FamilySpec> family;
  LayoutMode layout;
  /// Closed-form ribbonlength for layouts whose coordinates only
  /// approximate an irrational shape (the regular pentagon).
  std::optional<double> analytic_ribbonlength;
  std::optional<std::string> analytic_expression;
};

/// An open two-strand block of half-twists with ends A, B (strand_ab)
/// and C, D (strand_cd).
struct WrapFragment {
  Strand strand_ab;  // starts at end A, finishes at end B
  Strand strand_cd;  // starts at end C, finishes at end D
  Scalar interior_length;
  int interior_sticks = 0;
  std::vector<CrossingRecord> crossings;  // strand index 0 = AB, 1 = CD
  int twist_count = 0;
  /// Ribbon that sticks out of the square region at the four ends.
  Scalar stub_length;
};

/// Recomputes every vertex's fold angle from the geometry.
void assign_fold_angles(Strand& s);

/// Checks every RibbonDiagram invariant; throws RibbonError(InvalidDiagram
/// or LedgerError) with a description of the first violation.
void validate(const RibbonDiagram& d);

/// Fold-mirror property at every interior vertex with a fold. Returns the
/// number of vertices checked; throws InvalidDiagram on a violation.
std::size_t check_fold_mirror(const Strand& s);

}  // namespace ribbonforge
