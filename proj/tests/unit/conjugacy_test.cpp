#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "petalgrid/conjugacy.hpp"
#include "petalgrid/garside.hpp"

using namespace petalgrid;

namespace {

bool ends_with(const BraidWord& w, const BraidWord& tail) {
  if (tail.length() > w.length()) return false;
  return std::equal(tail.letters().begin(), tail.letters().end(), w.letters().end() - tail.length());
}

}  // namespace

TEST(TorusConjugacy, SevenTen) {
  const ConjugacyWitness w = torus_conjugacy_witness(7, 10);
  EXPECT_EQ(w.full_twists, 1);
  EXPECT_EQ(w.remainder, 3);
  EXPECT_EQ(w.band_indices, (std::vector<int>{3, 5}));
  EXPECT_TRUE(ends_with(w.rhs, round_trip(7, 3) * round_trip(7, 5)));
  EXPECT_EQ(w.conjugator, permutation_braid(residue_perm(7, 3)));
  EXPECT_TRUE(w.verified);
}

TEST(TorusConjugacy, SevenThirteen) {
  const ConjugacyWitness w = torus_conjugacy_witness(7, 13);
  EXPECT_EQ(w.band_indices, (std::vector<int>{2, 3, 4, 5, 6}));
  EXPECT_TRUE(w.verified);
}

TEST(TorusConjugacy, RemainderOneNeedsNoConjugator) {
  const ConjugacyWitness w = torus_conjugacy_witness(5, 6);
  EXPECT_TRUE(w.conjugator.empty());
  BraidWord expected = delta(5);
  for (int k = 2; k <= 5; ++k) expected.append(round_trip(5, k));
  EXPECT_EQ(w.rhs, expected);
  EXPECT_TRUE(w.verified);
}

TEST(TorusConjugacy, Errors) {
  EXPECT_THROW(torus_conjugacy_witness(4, 6), std::invalid_argument);
  EXPECT_THROW(torus_conjugacy_witness(5, 3), std::invalid_argument);
  EXPECT_THROW(torus_conjugacy_witness(1, 3), std::invalid_argument);
}

TEST(TorusConjugacy, AllPairsUpToTwelve) {
  for (int s = 3; s <= 12; ++s) {
    for (int n = 2; n < s; ++n) {
      if (std::gcd(n, s) != 1) continue;
      EXPECT_TRUE(torus_conjugacy_witness(n, s).verified) << n << "," << s;
    }
  }
}

TEST(TorusConjugacy, BandBraidMatchesWitness) {
  EXPECT_EQ(torus_band_braid(5, 7), torus_conjugacy_witness(5, 7).rhs);
}

TEST(DeltaPower, ConjugateToBandFormForEveryResidue) {
  // X_k^-1 δ^k X_k = δ U_{a_1} ⋯ U_{a_{k-1}}, checked both by the witness and
  // by an explicit rebuild of the right-hand side.
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const ConjugacyWitness w = delta_power_witness(n, k);
      EXPECT_TRUE(w.verified) << n << "," << k;
      const BraidWord x = permutation_braid(residue_perm(n, k));
      const BraidWord rhs = delta(n) * round_trip_product(n, ceiling_sequence(n, k));
      EXPECT_TRUE(words_equal(concat({inverse(x), power(delta(n), k), x}), rhs)) << n << "," << k;
    }
  }
}

TEST(DeltaPower, NotCoprime) { EXPECT_THROW(delta_power_witness(6, 4), std::invalid_argument); }

TEST(ResiduePureBraid, IsPure) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      EXPECT_TRUE(induced_permutation(residue_pure_braid(n, k)).is_identity()) << n << "," << k;
    }
  }
}

TEST(ResiduePureBraid, EqualsBandProduct) {
  // α_k = U(A) with A = {⌈n i / k⌉}.
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      EXPECT_TRUE(words_equal(residue_pure_braid(n, k), round_trip_product(n, ceiling_sequence(n, k))))
          << n << "," << k;
    }
  }
}
