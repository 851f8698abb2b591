#pragma once

// Helpers shared by the construction sources.

#include <utility>
#include <vector>

#include "ribbonforge/model.hpp"

namespace ribbonforge::detail {

// Collects a polyline; layers[i] is the layer of the edge leaving point i.
struct Path {
  std::vector<Point2> points;
  std::vector<int> layers;

  void add(Point2 p, int layer) {
    points.push_back(std::move(p));
    layers.push_back(layer);
  }
  const Point2& last() const { return points.back(); }
};

/// Builds a strand with fold angles and fold sides derived from the
/// geometry and the edge layers. Without `folds` only positions and
/// layers are filled, which is all crossing detection needs.
Strand make_strand(Path path, bool closed, bool folds = true);

/// Layer of coil j (1-based): odd coils pass behind, even coils in front.
inline int coil_layer(int j, int front_base, int back_base) {
  return j % 2 == 1 ? back_base - (j + 1) / 2 : front_base + j / 2;
}

}  // namespace ribbonforge::detail
