#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/model.hpp"

namespace ribbonforge {

struct RenderOptions {
  // Rebuild the diagram's family in this layout before drawing. Left
  // empty, the diagram is drawn as given.
  std::optional<LayoutMode> mode;
  double scale = 100.0;  // pixels per unit
  bool show_fold_lines = true;
  bool show_centerline = false;
  double opacity = 0.85;
  bool label_ends = false;
};

/// One filled region of the flattened ribbon: a rectangle along a stick
/// or the pair of fold triangles around a fold vertex.
struct Panel {
  enum class Kind { Stick, Fold };
  Kind kind = Kind::Stick;
  std::size_t strand = 0;
  std::size_t index = 0;  // first edge of the stick, or the fold vertex
  int layer = 0;
  std::vector<std::pair<double, double>> corners;
};

/// Panels in painting order (lowest layer first, ties by strand and
/// position along it).
std::vector<Panel> ribbon_panels(const RibbonDiagram& d);

std::string to_svg(const RibbonDiagram& d, const RenderOptions& opts = {});

}  // namespace ribbonforge
