#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "petalgrid/permutation.hpp"

namespace petalgrid {

/// A word in the Artin generators of B_n. Letter +i is σ_i, letter -i is σ_i^{-1}.
class BraidWord {
 public:
  explicit BraidWord(int n, std::vector<int> letters = {});

  int strands() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_positive() const;

  BraidWord& append(const BraidWord& rhs);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

/// Literal concatenation; both words must live in the same B_n.
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(std::initializer_list<BraidWord> words);
inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return concat(a, b); }

/// Reverse the letters and flip every sign.
BraidWord inverse(const BraidWord& w);
/// w^e for any integer e (negative powers use inverse()).
BraidWord power(const BraidWord& w, int e);

BraidWord generator(int n, int i, int sign = 1);

// The named braids. All return the literal defining word.
BraidWord delta(int n);        ///< δ = σ_{n-1} ⋯ σ_1
BraidWord big_delta(int n);    ///< Δ = σ_1 (σ_2σ_1) ⋯ (σ_{n-1} ⋯ σ_1)
BraidWord descending(int n, int k);  ///< D_k = σ_{k-1} ⋯ σ_1, D_1 = 1
BraidWord ascending(int n, int k);   ///< E_k = σ_1 ⋯ σ_{k-1}, E_1 = 1
BraidWord round_trip(int n, int k);  ///< U_k = D_k E_k, U_1 = 1
/// U(A) = U_{a_1} ⋯ U_{a_k}
BraidWord round_trip_product(const IndexSubset& a);
/// U_{k_1} ⋯ U_{k_q} in the given order.
BraidWord round_trip_product(int n, std::span<const int> indices);

enum class NamedBraid { delta, big_delta, D, E, U };

BraidWord named_braid(NamedBraid kind, int n, std::optional<int> k = std::nullopt);

/// π_w, with induced_permutation(v·w) == π_v ∘ π_w. Letter signs are ignored.
Permutation induced_permutation(const BraidWord& w);

/// P(π): a positive word in which no two strands cross twice and whose
/// induced permutation is π. Always the same reduced word for the same π.
BraidWord permutation_braid(const Permutation& p);

/// X_{A,B} = P(π_{A,B}); with barred = true, X̄_{A,B} = (X_{B,A})^{-1}.
BraidWord subset_braid(const IndexSubset& a, const IndexSubset& b, bool barred = false);

/// α ⊔ β: β stacked on top of α, i.e. β's letters shifted up by α's strand count.
BraidWord split(const BraidWord& alpha, const BraidWord& beta);

/// τ(w) = δ^{-1} w δ. When every |letter| <= n - 2 the result is the
/// letterwise shift σ_i -> σ_{i+1}; otherwise it is the literal conjugate.
BraidWord tau(const BraidWord& w);

/// "s1 s2^-1 s1" style; the empty word prints as "1".
std::string to_string(const BraidWord& w);
/// Parses the to_string() syntax. "1" or "" is the empty word.
BraidWord parse_braid(int n, std::string_view text);

struct PermutationBraidSplit {
  BraidWord lower;     ///< P_1 in B_k
  BraidWord upper;     ///< P_2 in B_{n-k}
  IndexSubset support; ///< A = π^{-1}({1..k})
};

/// P(π) = (P_1 ⊔ P_2) X_{L,A} with L = {1..k}.
PermutationBraidSplit decompose_permutation_braid(const Permutation& p, int k);

}  // namespace petalgrid
