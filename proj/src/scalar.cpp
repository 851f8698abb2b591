#include "ribbonforge/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ribbonforge {

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+')) {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  auto slash = text.find('/');
  mpz_class num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(text);
    } else {
      num = mpz_class(text.substr(0, slash));
      den = mpz_class(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

double to_double(const Scalar& s) { return s.get_d(); }

bool small_dyadic(const Scalar& s) {
  const mpz_srcptr den = s.get_den_mpz_t();
  const std::size_t bits = mpz_sizeinbase(den, 2);
  return bits <= 21 && mpz_scan1(den, 0) == bits - 1 && mpz_sizeinbase(s.get_num_mpz_t(), 2) <= 25;
}

bool rational_sqrt(const Scalar& s, Scalar& root) {
  if (s < 0) return false;
  const mpz_class& num = s.get_num();
  const mpz_class& den = s.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace ribbonforge
