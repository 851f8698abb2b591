#pragma once

#include <gmpxx.h>

#include <string>

namespace ribbonforge {

// Exact rational coordinate type. mpq_class keeps values in canonical
// reduced form after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(const std::string& text);

/// Renders as "p/q" (or "p" when the denominator is 1).
std::string to_string(const Scalar& s);

double to_double(const Scalar& s);

/// Multiple of 2^-20 with numerator under 2^25. Differences of such values
/// fit in 26 bits, so a cross or dot product of two differences is exact
/// in double precision.
bool small_dyadic(const Scalar& s);

/// Exact square root when `s` is the square of a rational.
bool rational_sqrt(const Scalar& s, Scalar& root);

}  // namespace ribbonforge
