#pragma once

#include <vector>

#include "ribbonforge/model.hpp"

namespace ribbonforge::detail {

/// Free placement choices of the exploded pretzel. All heights are in
/// units of h/32 above the centre line y = 1/2.
struct PretzelParams {
  std::vector<int> order;    // wrap indices of the coil blocks, left to right
  std::vector<int> left_y;   // join heights; index k-1 is the outer join
  std::vector<int> right_y;
  std::vector<int> k_y;      // height of each wrap's first corner (or midpoint for 0)
  std::vector<int> m_y;      // height of each wrap's last corner
};

// `salt` picks among equivalent placements when a default one happens to
// put three lines through a point.
PretzelParams default_pretzel_params(const std::vector<int>& twists, int salt = 0);

/// Closed strands of the pretzel; h = 0 gives the tight layout.
std::vector<Strand> pretzel_strands(const std::vector<int>& twists, const PretzelParams& p, const Scalar& h,
                                    bool folds = true);

}  // namespace ribbonforge::detail
