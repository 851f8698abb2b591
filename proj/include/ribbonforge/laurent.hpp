#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace ribbonforge {

/// Integer Laurent polynomial in the bracket variable A. Zero
/// coefficients are never stored.
class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Coeff constant);
  static LaurentPolynomial monomial(Coeff coeff, int exponent);
  /// The loop value -A^2 - A^-2.
  static LaurentPolynomial loop();

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(int exponent) const;
  std::size_t term_count() const { return terms_.size(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ < b.terms_;
  }

  LaurentPolynomial pow(unsigned k) const;
  /// The image under A -> A^-1 (mirror image).
  LaurentPolynomial mirror() const;

  /// e.g. "-A^-3 + 2 - A^4".
  std::string to_string() const;

 private:
  void add_term(int exponent, Coeff coeff);
  std::map<int, Coeff> terms_;
};

}  // namespace ribbonforge
