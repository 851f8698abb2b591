#pragma once

#include <string>

#include "ribbonforge/metrics.hpp"
#include "ribbonforge/model.hpp"

namespace ribbonforge {

inline constexpr int kDocumentVersion = 1;

/// Diagram document, version 1. Rationals are written as "p/q" strings so
/// nothing is lost; fold angles are doubles.
std::string serialize_diagram(const RibbonDiagram& d);

/// Parses and re-validates; throws RibbonError(FormatError) on malformed
/// input and the validation error otherwise.
RibbonDiagram deserialize_diagram(const std::string& text);

RibbonDiagram load_diagram(const std::string& path);
void save_text(const std::string& path, const std::string& text);

/// Field-by-field equality, exact on rationals and doubles.
bool structurally_equal(const RibbonDiagram& a, const RibbonDiagram& b);

}  // namespace ribbonforge
