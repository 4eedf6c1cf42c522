#include <numeric>
#include <stdexcept>

#include "petalgrid/conjugacy.hpp"
#include "petalgrid/garside.hpp"

namespace petalgrid {

namespace {

void check_pair(int n, int s) {
  if (n < 2 || s <= n) throw std::invalid_argument("requires 2 <= n < s");
  if (std::gcd(n, s) != 1) throw std::invalid_argument("not coprime");
}

BraidWord band_braid(int n, int s) {
  BraidWord full_twist(n);
  for (int i = 2; i <= n; ++i) full_twist.append(round_trip(n, i));
  return concat({delta(n), power(full_twist, s / n),
                 round_trip_product(n, ceiling_sequence(n, s % n))});
}

}  // namespace

BraidWord torus_band_braid(int n, int s) {
  check_pair(n, s);
  return band_braid(n, s);
}

ConjugacyWitness torus_conjugacy_witness(int n, int s) {
  check_pair(n, s);
  return delta_power_witness(n, s);
}

ConjugacyWitness delta_power_witness(int n, int s) {
  if (n < 2 || s < 1) throw std::invalid_argument("requires n >= 2 and s >= 1");
  if (std::gcd(n, s) != 1) throw std::invalid_argument("not coprime");
  ConjugacyWitness w{.strands = n,
                     .exponent = s,
                     .full_twists = s / n,
                     .remainder = s % n,
                     .band_indices = {},
                     .conjugator = BraidWord(n),
                     .rhs = BraidWord(n)};
  const int k = w.remainder;
  w.band_indices = ceiling_sequence(n, k);
  if (k > 1) w.conjugator = permutation_braid(residue_perm(n, k));
  w.rhs = band_braid(n, s);

  const BraidWord lhs = concat({inverse(w.conjugator), power(delta(n), s), w.conjugator});
  w.verified = words_equal(lhs, w.rhs);
  return w;
}

BraidWord residue_pure_braid(int n, int k) {
  const BraidWord x = permutation_braid(residue_perm(n, k));
  return concat({inverse(tau(x)), power(delta(n), k - 1), x});
}

}  // namespace petalgrid
