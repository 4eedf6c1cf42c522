#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "petalgrid/invariants.hpp"

namespace petalgrid {
namespace {

LaurentPolynomial t_power_minus_one(int e) {
  return LaurentPolynomial::monomial(1, e) - 1;
}

}  // namespace

LaurentPolynomial torus_alexander(int n, int s) {
  if (n < 1 || s < 1) throw std::invalid_argument("torus parameters must be positive");
  if (std::gcd(n, s) != 1) throw std::invalid_argument("not coprime");
  const LaurentPolynomial num = t_power_minus_one(n * s) * t_power_minus_one(1);
  const LaurentPolynomial den = t_power_minus_one(n) * t_power_minus_one(s);
  return divide_exact(num, den).normalized();
}

int max_crossings_from_env() {
  const char* raw = std::getenv("PETALGRID_MAX_CROSSINGS");
  if (raw == nullptr) return kDefaultMaxCrossings;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0 || v > 1'000'000) return kDefaultMaxCrossings;
  return static_cast<int>(v);
}

LaurentMatrix alexander_matrix(const PlanarDiagram& d) {
  const std::size_t c = d.crossings.size();
  LaurentMatrix m(c, static_cast<std::size_t>(d.arc_count));
  const LaurentPolynomial t = LaurentPolynomial::t();
  for (std::size_t r = 0; r < c; ++r) {
    const Crossing& x = d.crossings[r];
    // Fox derivatives of the Wirtinger relation, scaled to polynomial entries.
    if (x.sign > 0) {
      m(r, x.over_arc) += 1 - t;
      m(r, x.under_in_arc) += t;
      m(r, x.under_out_arc) -= 1;
    } else {
      m(r, x.over_arc) += t - 1;
      m(r, x.under_in_arc) += 1;
      m(r, x.under_out_arc) -= t;
    }
  }
  return m;
}

LaurentPolynomial alexander_from_pd(const PlanarDiagram& d, int max_crossings) {
  if (d.components != 1) throw std::invalid_argument("not a knot");
  const int c = static_cast<int>(d.crossings.size());
  if (c > max_crossings) {
    throw std::length_error(std::to_string(c) + " crossings exceeds the limit of " +
                            std::to_string(max_crossings) +
                            "; use the braid-closure pipeline instead");
  }
  if (c == 0) return 1;
  const LaurentMatrix m = alexander_matrix(d);
  return determinant(m.minor(c - 1, c - 1)).normalized();
}

}  // namespace petalgrid
