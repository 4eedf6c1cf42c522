#pragma once

#include <vector>

#include "petalgrid/braid.hpp"

namespace petalgrid {

/// Explicit conjugacy δ^s ~ δ (U_2 ⋯ U_n)^m U_{a_1} ⋯ U_{a_{k-1}} in B_n,
/// where s = n·m + k with 1 <= k <= n - 1 and a_i = ⌈n·i/k⌉.
struct ConjugacyWitness {
  int strands = 0;
  int exponent = 0;               ///< s
  int full_twists = 0;            ///< m = ⌊s/n⌋
  int remainder = 0;              ///< k = s - n·m
  std::vector<int> band_indices;  ///< a_1 < ... < a_{k-1}
  BraidWord conjugator;           ///< X_k = P(π_k); empty when k = 1
  BraidWord rhs;                  ///< δ (U_2⋯U_n)^m U_{a_1}⋯U_{a_{k-1}}
  bool verified = false;          ///< X_k^{-1} δ^s X_k == rhs in B_n
};

/// δ (U_2⋯U_n)^m U_{a_1}⋯U_{a_{k-1}} for s = n·m + k, the closed-braid form
/// of T(n, s) that the petal synthesizer realizes.
BraidWord torus_band_braid(int n, int s);

/// Requires gcd(n, s) = 1 and 2 <= n < s.
ConjugacyWitness torus_conjugacy_witness(int n, int s);

/// The same construction for any s >= 1 coprime to n, so s < n gives
/// X_k^{-1} δ^k X_k = δ U_{a_1}⋯U_{a_{k-1}} directly.
ConjugacyWitness delta_power_witness(int n, int s);

/// α_k = τ(X_k)^{-1} δ^{k-1} X_k, the pure braid equal to U(A).
BraidWord residue_pure_braid(int n, int k);

}  // namespace petalgrid
