#pragma once

#include <vector>

#include "ribbonforge/model.hpp"

namespace ribbonforge {

/// Ledger reference spacing: every construction declares the crossings
/// of its exploded layout at this delta, for all layout modes.
Scalar ledger_reference_delta();

/// Slope r' close to r for which (1, r') has rational length:
/// r' = 4r / (4 - r^2).
Scalar pythagorean_slope(const Scalar& r);

/// n half-twists by the wrap method, concentrated in the unit square.
/// Ribbon AB is coiled around the straight ribbon CD. Throws
/// ParameterError for n = 0.
WrapFragment wrap(int n, const LayoutMode& mode = LayoutMode::tight());

/// The wrap with its last coil folded by pi/2 so that all four ends leave
/// horizontally (A, C to the left; B, D to the right). n = 0 gives two
/// straight overlapping ribbons.
WrapFragment modified_wrap(int n, const LayoutMode& mode = LayoutMode::tight());

/// (2,q)-torus link with Rib = q + 3 and q + 5 sticks.
RibbonDiagram torus_link(int q, const LayoutMode& mode = LayoutMode::tight());

/// Twist knot T_n with Rib = n + 6 and n + 8 sticks.
RibbonDiagram twist_knot(int n, const LayoutMode& mode = LayoutMode::tight());

/// Pretzel link P(p_1, ..., p_k), k >= 3, with Rib = sum |p_i| + 2k.
RibbonDiagram pretzel(const std::vector<int>& twists, const LayoutMode& mode = LayoutMode::tight());

/// Five-stick trefoil on a (rationally approximated) regular pentagram.
RibbonDiagram pentagon_trefoil();

/// Hopf link from two doubled two-stick loops, Rib = 4.
RibbonDiagram hopf_link(const LayoutMode& mode = LayoutMode::tight());

/// Dispatches on the family; PentagonTrefoil ignores `mode`.
RibbonDiagram build_family(const FamilySpec& f, const LayoutMode& mode = LayoutMode::tight());

}  // namespace ribbonforge
