#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "petalgrid/laurent_matrix.hpp"

using namespace petalgrid;
using ::testing::HasSubstr;

namespace {

const LaurentPolynomial t = LaurentPolynomial::t();
const LaurentPolynomial ti = LaurentPolynomial::monomial(1, -1);

}  // namespace

TEST(Laurent, Trimmed) {
  const LaurentPolynomial p(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(p.min_exp(), 0);
  EXPECT_EQ(p.max_exp(), 2);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_TRUE(LaurentPolynomial(5, {0, 0}).is_zero());
  EXPECT_EQ(LaurentPolynomial(5, {0, 0}), LaurentPolynomial());
}

TEST(Laurent, Arithmetic) {
  EXPECT_EQ((t - 1) * (t + 1), t * t - 1);
  EXPECT_EQ(t * ti, LaurentPolynomial(1));
  EXPECT_EQ(-(t - 1), 1 - t);
  EXPECT_EQ((t + 1) - (t + 1), LaurentPolynomial());
}

TEST(Laurent, Normalize) {
  EXPECT_EQ((-ti + 1 - t).normalized(), t * t - t + 1);
  EXPECT_EQ((t * t - t + 1).substitute_inverse().normalized(), t * t - t + 1);
  EXPECT_EQ(LaurentPolynomial::monomial(-3, 7).normalized(), LaurentPolynomial(3));
  EXPECT_TRUE(equal_up_to_units(t * t * t - t * t, 1 - t));
  EXPECT_FALSE(equal_up_to_units(t + 2, t + 1));
}

TEST(Laurent, ExactDivision) {
  EXPECT_EQ(divide_exact(t * t - 1, t - 1), t + 1);
  EXPECT_EQ(divide_exact(ti * (t * t - 1), ti * (t + 1)), t - 1);
  try {
    divide_exact(t * t + 1, t - 1);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_THAT(e.what(), HasSubstr("not divisible"));
  }
  EXPECT_THROW(divide_exact(t, LaurentPolynomial()), std::domain_error);
}

TEST(Laurent, DivisionInvertsMultiplication) {
  oracle::Engine rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPolynomial a = oracle::random_polynomial(rng, 6, -4, 6, 5);
    const LaurentPolynomial b = oracle::random_polynomial(rng, 5, -3, 5, 5);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(Laurent, RingAxioms) {
  oracle::Engine rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPolynomial a = oracle::random_polynomial(rng, 5, -4, 4, 9);
    const LaurentPolynomial b = oracle::random_polynomial(rng, 5, -4, 4, 9);
    const LaurentPolynomial c = oracle::random_polynomial(rng, 5, -4, 4, 9);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + (-a), LaurentPolynomial());
    EXPECT_EQ((a * b).substitute_inverse(), a.substitute_inverse() * b.substitute_inverse());
  }
}

TEST(Laurent, Evaluate) {
  EXPECT_EQ((t * t - t + 1).evaluate(1), 1);
  EXPECT_EQ((t * t - t + 1).evaluate(2), 3);
  EXPECT_EQ((ti + t).evaluate(-1), -2);
  EXPECT_THROW((ti + 1).evaluate(2), std::domain_error);
}

TEST(Laurent, BigCoefficients) {
  LaurentPolynomial p = t + 1;
  LaurentPolynomial q = 1;
  for (int i = 0; i < 80; ++i) q *= p;
  // (1+t)^80 has a central binomial coefficient far beyond 64 bits.
  EXPECT_GT(q.coefficient(40), Integer("1000000000000000000000"));
  for (int i = 0; i < 80; ++i) q = divide_exact(q, p);
  EXPECT_EQ(q, LaurentPolynomial(1));
}

TEST(Laurent, Printing) {
  EXPECT_EQ(to_string(t * t - t + 1), "t^2 - t + 1");
  EXPECT_EQ(to_string(-ti + 3), "3 - t^-1");
  EXPECT_EQ(to_string(LaurentPolynomial()), "0");
  EXPECT_EQ(to_string(2 * t), "2t");
}

TEST(LaurentMatrix, SmallDeterminants) {
  LaurentMatrix m(2, 2);
  m(0, 0) = t;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = ti;
  EXPECT_EQ(determinant(m), LaurentPolynomial());
  m(1, 1) = t;
  EXPECT_EQ(determinant(m), t * t - 1);
  EXPECT_EQ(determinant(LaurentMatrix::identity(4)), LaurentPolynomial(1));
  EXPECT_EQ(determinant(LaurentMatrix(0, 0)), LaurentPolynomial(1));
  EXPECT_THROW(determinant(LaurentMatrix(2, 3)), std::invalid_argument);
}

TEST(LaurentMatrix, DeterminantMatchesCofactorExpansion) {
  oracle::Engine rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentMatrix m(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        // sparse-ish rows, including zero pivots, to exercise pivot search
        if (oracle::uniform(rng, 0, 3) != 0) m(r, c) = oracle::random_polynomial(rng, 3, -2, 2, 3);
      }
    }
    EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m));
  }
}

TEST(LaurentMatrix, DeterminantIsMultiplicative) {
  oracle::Engine rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentMatrix a(4, 4), b(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        a(r, c) = oracle::random_polynomial(rng, 2, -1, 1, 2);
        b(r, c) = oracle::random_polynomial(rng, 2, -1, 1, 2);
      }
    }
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}
