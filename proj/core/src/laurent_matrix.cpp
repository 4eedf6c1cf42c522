#include "petalgrid/laurent_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace petalgrid {

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix LaurentMatrix::minor(std::size_t r, std::size_t c) const {
  LaurentMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  LaurentMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const LaurentPolynomial& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

LaurentPolynomial determinant(LaurentMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;

  int shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int lowest = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lowest = any ? std::min(lowest, m(i, j).min_exp()) : m(i, j).min_exp();
      any = true;
    }
    if (!any) return {};
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-lowest);
    shift += lowest;
  }

  bool negate = false;
  LaurentPolynomial previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest available pivot keeps the intermediate minors small.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot == n || m(i, k).term_count() < m(pivot, k).term_count()) pivot = i;
    }
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    const LaurentPolynomial& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const LaurentPolynomial lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial value = p * m(i, j);
        if (!lead.is_zero() && !m(k, j).is_zero()) value -= lead * m(k, j);
        m(i, j) = value.is_zero() ? value : divide_exact(value, previous);
      }
      m(i, k) = LaurentPolynomial();
    }
    previous = p;
  }
  LaurentPolynomial det = m(n - 1, n - 1).shifted(shift);
  return negate ? -det : det;
}

}  // namespace petalgrid
