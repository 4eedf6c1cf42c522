#pragma once

#include <string_view>
#include <vector>

#include "petalgrid/permutation.hpp"

namespace petalgrid {

/// A permutation (a_1, ..., a_p) of odd length p >= 3, read as the heights
/// of the petals around a single multi-crossing.
class PetalPermutation {
 public:
  explicit PetalPermutation(Permutation entries);
  explicit PetalPermutation(std::vector<int> entries) : PetalPermutation(Permutation(std::move(entries))) {}

  const Permutation& entries() const { return entries_; }
  int length() const { return entries_.degree(); }
  /// n with p = 2n + 1
  int half() const { return (length() - 1) / 2; }
  int operator[](int i) const { return entries_(i); }  ///< 1-indexed a_i

  /// (a_1, a_3, ..., a_p)
  std::vector<int> odd_terms() const;
  /// (a_2, a_4, ..., a_{p-1})
  std::vector<int> even_terms() const;

  friend bool operator==(const PetalPermutation&, const PetalPermutation&) = default;

 private:
  Permutation entries_;
};

enum class PetalClass { generic, braided, strongly_braided };

std::string_view to_string(PetalClass c);

/// The strongest of generic < braided < strongly_braided that applies.
PetalClass classify(const PetalPermutation& pp);

/// (n+1, n, ..., 1) ⊙ (2n+1, 2n, ..., n+2), a petal permutation of T(n, n+1).
PetalPermutation base_petal(int n);

/// s_k: entries above k shift up by one and k becomes (k+1, p+2, k).
PetalPermutation stabilize(const PetalPermutation& pp, int k);

/// s_k on a strongly braided input, computed on the even terms alone.
PetalPermutation stabilize_fast(const PetalPermutation& pp, int k);

/// Stabilization indices for T(n, s), sorted descending.
std::vector<int> u_indices(int n, int s);

/// 2s - 2⌊s/n⌋ + 1
int petal_bound(int n, int s);

/// base_petal(n) stabilized at each of u_indices(n, s) in turn.
PetalPermutation synthesize(int n, int s);

/// Throws std::invalid_argument unless gcd(n, s) = 1 and 2 <= n < s.
void check_torus_pair(int n, int s);

}  // namespace petalgrid
