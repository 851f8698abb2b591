#pragma once

#include <array>
#include <string>
#include <vector>

namespace ribbonforge {

/// Planar diagram code. Each crossing lists four arc labels counter-
/// clockwise, starting at the incoming under-arc. Arcs are the edges of
/// the 4-valent diagram graph, so every label appears exactly twice.
/// Components without crossings are counted in `free_loops`.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int n_arcs = 0;
  int free_loops = 0;

  friend bool operator==(const PDCode& a, const PDCode& b) {
    return a.crossings == b.crossings && a.n_arcs == b.n_arcs && a.free_loops == b.free_loops;
  }
};

/// Throws RibbonError(FormatError) unless labels are 1..n_arcs and each
/// appears exactly twice.
void validate_pd(const PDCode& pd);

/// Text form:
///   pd <n_crossings> <n_arcs>
///   <blank>
///   X a b c d        (one per crossing)
///   unlinked <k>     (only when free_loops > 0)
std::string to_text(const PDCode& pd);
PDCode parse_pd_text(const std::string& text);

/// Orientation data recovered from a PD code. Under-strands run a -> c;
/// the remaining freedom (components that are never under) is fixed by
/// a deterministic rule.
struct OrientedPD {
  std::vector<std::vector<int>> components;  // arc labels in travel order
  std::vector<int> arc_component;            // indexed by label
  std::vector<int> over_in;                  // per crossing: incoming over arc
  std::vector<int> natural_sign;             // per crossing, +1 right-handed
  std::vector<int> under_component;
  std::vector<int> over_component;
};

OrientedPD orient(const PDCode& pd);

/// One passage of a walked strand through a crossing.
struct WalkEvent {
  int crossing;  // index into the crossing list being built
  bool over;
};

/// Builds a PD code from per-component event sequences (in travel order)
/// and per-crossing signs. Arc labels increase along each walk.
PDCode build_pd(const std::vector<std::vector<WalkEvent>>& walks, const std::vector<int>& signs);

/// Relabels arcs in travel order (components ordered by their smallest
/// label, each started at that label) and sorts the crossing list.
PDCode canonical_form(const PDCode& pd);

}  // namespace ribbonforge
