#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace petalgrid {

/// A bijection of {1, ..., n}, stored as its 1-indexed image list
/// (images[i - 1] == p(i)). Permutations act from the left, so
/// compose(p, q)(i) == p(q(i)).
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` rearranges {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
};

/// (p1 ∘ p2)(i) = p1(p2(i)). Throws on degree mismatch.
Permutation compose(const Permutation& p1, const Permutation& p2);

inline Permutation operator*(const Permutation& p1, const Permutation& p2) {
  return compose(p1, p2);
}

/// (a1..a_{k+1}) ⊙ (b1..bk) = (a1, b1, a2, b2, ..., ak, bk, a_{k+1}).
std::vector<int> interleave(std::span<const int> outer, std::span<const int> inner);

/// Same as interleave() but requires the result to be a permutation.
Permutation interleave_permutation(std::span<const int> outer, std::span<const int> inner);

/// A strictly increasing subset of {1, ..., n}.
class IndexSubset {
 public:
  IndexSubset(int n, std::vector<int> members);

  /// {lo, lo + 1, ..., hi} inside {1..n}; empty when hi < lo.
  static IndexSubset range(int n, int lo, int hi);
  /// {1, ..., k}
  static IndexSubset lowest(int n, int k) { return range(n, 1, k); }
  /// {n - k + 1, ..., n}
  static IndexSubset highest(int n, int k) { return range(n, n - k + 1, n); }

  int ambient() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  std::span<const int> members() const { return members_; }
  int operator[](std::size_t i) const { return members_[i]; }
  bool contains(int v) const;
  IndexSubset complement() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  int n_;
  std::vector<int> members_;
};

/// π_{A,B}: sends the i-th smallest element of B to the i-th smallest of A,
/// and likewise the complements. order_bijection(B, A) is the inverse.
Permutation order_bijection(const IndexSubset& a, const IndexSubset& b);

/// π_k(i) ≡ k·i (mod n), represented in {1..n}; π_k(n) = n.
Permutation residue_perm(int n, int k);

/// The image {p(i) : i ∈ s}.
IndexSubset image(const Permutation& p, const IndexSubset& s);

/// ⌈n·i/k⌉ for i = 1..k-1 (strictly increasing, all in [2, n] when gcd(n,k) = 1).
std::vector<int> ceiling_sequence(int n, int k);

int ceil_div(int a, int b);

std::string to_string(const Permutation& p);

}  // namespace petalgrid
