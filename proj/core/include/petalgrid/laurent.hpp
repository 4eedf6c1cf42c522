#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace petalgrid {

using Integer = boost::multiprecision::cpp_int;

/// Exact polynomial in t and t^{-1} with integer coefficients:
/// sum_j coeffs[j] t^{min_exp + j}. Always trimmed, so the first and last
/// stored coefficients are nonzero; the zero polynomial stores nothing.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int min_exp, std::vector<Integer> coeffs);
  LaurentPolynomial(int constant) : LaurentPolynomial(0, {Integer(constant)}) {}  // NOLINT
  LaurentPolynomial(const Integer& constant) : LaurentPolynomial(0, {constant}) {}  // NOLINT

  static LaurentPolynomial monomial(const Integer& c, int exponent);
  /// t
  static LaurentPolynomial t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  /// Exponent of the top term; min_exp() - 1 for the zero polynomial.
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  /// max_exp() - min_exp(), the breadth of the polynomial.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(int exponent) const;
  std::size_t term_count() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  /// Multiply by t^k.
  LaurentPolynomial shifted(int k) const;
  /// f(t) -> f(1/t)
  LaurentPolynomial substitute_inverse() const;
  /// Divide by ±t^k so the lowest term sits at t^0 with a positive coefficient.
  LaurentPolynomial normalized() const;

  /// Value at an integer point. Throws std::domain_error when a negative
  /// power would make the value non-integral (|t| != 1 and min_exp < 0).
  Integer evaluate(const Integer& at) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// a / b when b divides a in Z[t, t^{-1}]; throws std::domain_error("not divisible") otherwise.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Equality up to multiplication by ±t^k.
bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// "t^2 - t + 1", "-t^-1 + 3", "0".
std::string to_string(const LaurentPolynomial& p);

}  // namespace petalgrid
