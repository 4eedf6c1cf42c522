#include <stdexcept>

#include "petalgrid/invariants.hpp"

namespace petalgrid {
namespace {

using Poly = LaurentPolynomial;

}  // namespace

LaurentMatrix reduced_burau_generator(int n, int letter) {
  const int i = letter > 0 ? letter : -letter;
  if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("generator out of range");
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  LaurentMatrix m = LaurentMatrix::identity(dim);
  const std::size_t c = static_cast<std::size_t>(i - 1);
  const Poly t = Poly::t();
  const Poly ti = Poly::monomial(1, -1);
  const bool has_left = i > 1;
  const bool has_right = i < n - 1;
  if (letter > 0) {
    m(c, c) = -t;
    if (has_left) m(c - 1, c) = t;
    if (has_right) m(c + 1, c) = 1;
  } else {
    m(c, c) = -ti;
    if (has_left) m(c - 1, c) = 1;
    if (has_right) m(c + 1, c) = ti;
  }
  return m;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) return LaurentMatrix::identity(0);
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n - 1));
  const std::size_t rows = m.rows();
  // Each generator differs from the identity only in column i-1, so right
  // multiplication rewrites that single column.
  for (int letter : w.letters()) {
    const LaurentMatrix g = reduced_burau_generator(n, letter);
    const std::size_t c = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
    const std::size_t lo = c > 0 ? c - 1 : 0;
    const std::size_t hi = c + 1 < rows ? c + 1 : c;
    for (std::size_t r = 0; r < rows; ++r) {
      Poly sum;
      for (std::size_t k = lo; k <= hi; ++k) {
        if (!g(k, c).is_zero() && !m(r, k).is_zero()) sum += m(r, k) * g(k, c);
      }
      m(r, c) = std::move(sum);
    }
  }
  return m;
}

LaurentPolynomial alexander_from_closure(const BraidWord& w) {
  const int n = w.strands();
  const Permutation pi = induced_permutation(w);
  int cycle = 0;
  for (int i = 1;;) {
    i = pi(i);
    ++cycle;
    if (i == 1) break;
  }
  if (cycle != n) throw std::invalid_argument("closure has multiple components");
  if (n == 1) return 1;
  const LaurentMatrix rho = reduced_burau(w);
  const LaurentPolynomial det = determinant(LaurentMatrix::identity(rho.rows()) - rho);
  return divide_exact(det, LaurentPolynomial(0, std::vector<Integer>(n, 1))).normalized();
}

}  // namespace petalgrid
