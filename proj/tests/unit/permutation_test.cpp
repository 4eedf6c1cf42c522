#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "petalgrid/permutation.hpp"

using namespace petalgrid;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

namespace {

std::vector<int> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

Permutation cyclic_delta(int n) {
  std::vector<int> v(n);
  v[0] = n;
  std::iota(v.begin() + 1, v.end(), 1);
  return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST(Permutation, ComposeInvolution) {
  EXPECT_EQ(compose(Permutation{2, 1}, Permutation{2, 1}), Permutation::identity(2));
}

TEST(Permutation, ComposeWithInverse) {
  const Permutation d = cyclic_delta(5);
  EXPECT_THAT(images(compose(d, d.inverse())), ElementsAre(1, 2, 3, 4, 5));
}

TEST(Permutation, DeltaSquared) {
  const Permutation d = cyclic_delta(5);
  EXPECT_THAT(images(d), ElementsAre(5, 1, 2, 3, 4));
  EXPECT_THAT(images(compose(d, d)), ElementsAre(4, 5, 1, 2, 3));
}

TEST(Permutation, ComposeActsFromTheLeft) {
  const Permutation p1{2, 3, 1};
  const Permutation p2{1, 3, 2};
  const Permutation c = p1 * p2;
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(c(i), p1(p2(i)));
}

TEST(Permutation, DegreeMismatch) {
  try {
    compose(Permutation{1, 2}, Permutation{1, 2, 3});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_THAT(e.what(), HasSubstr("degree mismatch"));
  }
}

TEST(Permutation, InverseProperty) {
  oracle::Engine rng(11);
  for (int t = 0; t < 300; ++t) {
    const Permutation p = oracle::random_permutation(rng, oracle::uniform(rng, 1, 12));
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  }
}

TEST(Permutation, InversionsMatchBruteForce) {
  oracle::Engine rng(12);
  for (int t = 0; t < 200; ++t) {
    const Permutation p = oracle::random_permutation(rng, oracle::uniform(rng, 1, 12));
    EXPECT_EQ(p.inversions(), oracle::inversions(p)) << to_string(p);
  }
}

TEST(Interleave, Examples) {
  EXPECT_THAT(interleave(std::vector{1, 2, 3, 4}, std::vector{5, 6, 7}), ElementsAre(1, 5, 2, 6, 3, 7, 4));
  EXPECT_THAT(interleave(std::vector{1}, std::vector<int>{}), ElementsAre(1));
  EXPECT_THAT(images(interleave_permutation(std::vector{3, 2, 1}, std::vector{5, 4})),
              ElementsAre(3, 5, 2, 4, 1));
}

TEST(Interleave, Errors) {
  EXPECT_THROW(interleave(std::vector{1, 2}, std::vector{3, 4}), std::invalid_argument);
  EXPECT_THROW(interleave_permutation(std::vector{1, 2}, std::vector{2}), std::invalid_argument);
}

TEST(Interleave, LengthProperty) {
  oracle::Engine rng(13);
  for (int t = 0; t < 100; ++t) {
    const int k = oracle::uniform(rng, 0, 10);
    const Permutation p = oracle::random_permutation(rng, 2 * k + 1);
    std::vector<int> outer;
    std::vector<int> inner;
    for (int i = 1; i <= 2 * k + 1; ++i) (i % 2 ? outer : inner).push_back(p(i));
    const auto merged = interleave(outer, inner);
    EXPECT_EQ(merged.size(), static_cast<std::size_t>(2 * k + 1));
    EXPECT_EQ(interleave_permutation(outer, inner), p);
  }
}

TEST(IndexSubset, Validation) {
  EXPECT_THROW(IndexSubset(5, {2, 2}), std::invalid_argument);
  EXPECT_THROW(IndexSubset(5, {3, 1}), std::invalid_argument);
  EXPECT_THROW(IndexSubset(5, {6}), std::invalid_argument);
  const IndexSubset a(7, {2, 4, 6});
  const IndexSubset rest = a.complement();
  EXPECT_THAT(std::vector<int>(rest.members().begin(), rest.members().end()),
              ElementsAre(1, 3, 5, 7));
  EXPECT_EQ(IndexSubset::highest(7, 3), IndexSubset(7, {5, 6, 7}));
}

TEST(OrderBijection, Examples) {
  EXPECT_THAT(images(order_bijection(IndexSubset(7, {2, 4, 6}), IndexSubset(7, {1, 2, 5}))),
              ElementsAre(2, 4, 1, 3, 6, 5, 7));
  EXPECT_THAT(images(order_bijection(IndexSubset(4, {1, 2}), IndexSubset(4, {1, 2}))), ElementsAre(1, 2, 3, 4));
  EXPECT_THAT(images(order_bijection(IndexSubset(7, {5, 6, 7}), IndexSubset(7, {1, 2, 3}))),
              ElementsAre(5, 6, 7, 1, 2, 3, 4));
  EXPECT_THROW(order_bijection(IndexSubset(5, {1}), IndexSubset(5, {1, 2})), std::invalid_argument);
}

TEST(OrderBijection, Properties) {
  oracle::Engine rng(14);
  for (int t = 0; t < 300; ++t) {
    const int n = oracle::uniform(rng, 1, 12);
    const int k = oracle::uniform(rng, 0, n);
    const IndexSubset a = oracle::random_subset(rng, n, k);
    const IndexSubset b = oracle::random_subset(rng, n, k);
    const Permutation p = order_bijection(a, b);
    for (int i = 0; i < k; ++i) EXPECT_EQ(p(b[i]), a[i]);
    const IndexSubset ac = a.complement();
    const IndexSubset bc = b.complement();
    for (int i = 0; i < bc.size(); ++i) EXPECT_EQ(p(bc[i]), ac[i]);
    EXPECT_TRUE(compose(order_bijection(b, a), p).is_identity());
  }
}

TEST(ResiduePerm, Examples) {
  EXPECT_THAT(images(residue_perm(7, 3)), ElementsAre(3, 6, 2, 5, 1, 4, 7));
  EXPECT_THAT(images(residue_perm(5, 1)), ElementsAre(1, 2, 3, 4, 5));
  EXPECT_THAT(images(residue_perm(5, 2)), ElementsAre(2, 4, 1, 3, 5));
  try {
    residue_perm(6, 4);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_THAT(e.what(), HasSubstr("not coprime"));
  }
}

TEST(ResiduePerm, CeilingSetMapsOntoLowerSet) {
  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const Permutation pk = residue_perm(n, k);
      std::vector<int> got;
      for (int a : ceiling_sequence(n, k)) got.push_back(pk(a));
      std::sort(got.begin(), got.end());
      std::vector<int> want(k - 1);
      std::iota(want.begin(), want.end(), 1);
      EXPECT_EQ(got, want) << "n=" << n << " k=" << k;
      ++checked;
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(CeilingSequence, Example) {
  EXPECT_THAT(ceiling_sequence(7, 3), ElementsAre(3, 5));
  EXPECT_THAT(ceiling_sequence(7, 6), ElementsAre(2, 3, 4, 5, 6));
  EXPECT_TRUE(ceiling_sequence(5, 1).empty());
}
