#pragma once

#include <vector>

#include "ribbonforge/laurent.hpp"
#include "ribbonforge/pd.hpp"

namespace ribbonforge {

inline constexpr int kDefaultBracketLimit = 24;

/// Reversal flag per component of `orient(pd).components`.
struct OrientationAssignment {
  std::vector<bool> reversed;
};

/// Number of closed components, including crossingless loops.
int components(const PDCode& pd);

/// Sign of every crossing under the given orientation.
std::vector<int> crossing_signs(const PDCode& pd, const OrientationAssignment& o);

int writhe(const PDCode& pd, const OrientationAssignment& o);

/// Half the signed count of crossings between the two components.
/// Throws ComponentError unless the PD has exactly two components.
int linking_number(const PDCode& pd, const OrientationAssignment& o);

/// Kauffman bracket normalised so that the crossingless unknot is 1.
/// Crossings are absorbed one at a time into a memo keyed by the
/// boundary pairing of the partial state. Throws TooLarge above `limit`.
LaurentPolynomial kauffman_bracket(const PDCode& pd, int limit = kDefaultBracketLimit);

/// (-A^3)^(-writhe) <pd>, kept in the variable A.
LaurentPolynomial jones_in_A(const PDCode& pd, const OrientationAssignment& o,
                             int limit = kDefaultBracketLimit);

/// All orientation assignments with the first component held fixed.
std::vector<OrientationAssignment> orientation_orbit(const PDCode& pd);

/// Divides by the loop value -A^2 - A^-2; throws std::domain_error when
/// the division is not exact.
LaurentPolynomial divide_by_loop(const LaurentPolynomial& p);

}  // namespace ribbonforge
