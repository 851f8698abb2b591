#include "ribbonforge/laurent.hpp"

#include <sstream>

namespace ribbonforge {

LaurentPolynomial::LaurentPolynomial(Coeff constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(Coeff coeff, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::loop() { return monomial(-1, 2) + monomial(-1, -2); }

LaurentPolynomial::Coeff LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(1);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

LaurentPolynomial LaurentPolynomial::mirror() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace ribbonforge
