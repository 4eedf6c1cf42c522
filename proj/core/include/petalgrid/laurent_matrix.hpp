#pragma once

#include <cstddef>
#include <vector>

#include "petalgrid/laurent.hpp"

namespace petalgrid {

/// Dense row-major matrix over Z[t, t^{-1}].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPolynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPolynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy with row `r` and column `c` removed.
  LaurentMatrix minor(std::size_t r, std::size_t c) const;

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPolynomial> data_;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);

/// Exact determinant. Rows are first multiplied by powers of t so every entry
/// is a polynomial, then fraction-free (Bareiss) elimination runs over Z[t];
/// the scaling is undone at the end so the result is the true determinant.
LaurentPolynomial determinant(LaurentMatrix m);

}  // namespace petalgrid
