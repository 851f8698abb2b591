#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/model.hpp"

namespace ribbonforge {

/// a + b*sqrt(2) with rational a, b.
struct ExactLength {
  Scalar rational;
  Scalar root2;

  double to_double() const;
  friend bool operator==(const ExactLength& x, const ExactLength& y) {
    return x.rational == y.rational && x.root2 == y.root2;
  }
};

std::string to_string(const ExactLength& v);

/// A length that is exact when the geometry allows it, numeric otherwise.
struct MetricValue {
  std::optional<ExactLength> exact;
  double numeric = 0.0;

  bool is_exact() const { return exact.has_value(); }
  /// Exact and free of sqrt(2).
  std::optional<Scalar> rational() const;
};

std::string to_string(const MetricValue& v);

struct MetricReport {
  MetricValue length;
  Scalar width;
  MetricValue ribbonlength;
  int sticks = 0;
  int components = 0;
  bool exact = false;
  // Some component has fewer than 3 sticks, i.e. is a doubled segment.
  bool degenerate_polygon = false;
};

MetricReport measure(const RibbonDiagram& d);

/// Maximal straight pieces of one strand; straight-through vertices merge.
int count_sticks(const Strand& s);

/// Closed forms the constructions are built to meet: q+3 / q+5 for the
/// torus family, n+6 / n+8 for twist knots, sum|p|+2k / sum|p|+4k for
/// pretzels, 4 / 4 for the Hopf link. Empty where no rational form exists.
std::optional<Scalar> formula_ribbonlength(const FamilySpec& f);
std::optional<int> formula_sticks(const FamilySpec& f);

bool check_crossing_bound(const Scalar& rib, int cr);
bool check_crossing_bound(const MetricValue& rib, int cr);

struct BoundRow {
  std::string table_name;
  std::optional<FamilySpec> family;  // empty for the analytic unknot row
  int bound = 0;
  int crossing_number = 0;
  std::string note;
};

std::vector<BoundRow> bound_table();

}  // namespace ribbonforge
