#pragma once

#include <string>
#include <vector>

#include "petalgrid/braid.hpp"
#include "petalgrid/permutation.hpp"

namespace petalgrid {

/// Left-greedy Garside form Δ^p · F_1 ⋯ F_r of a braid in B_n.
///
/// Each factor is a permutation braid identified by its induced permutation;
/// no factor is the identity or Δ, and every adjacent pair (F_i, F_{i+1}) is
/// left-weighted: any σ_j that left-divides F_{i+1} already right-divides F_i.
/// Two words represent the same braid iff their forms compare equal.
struct NormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm left_normal_form(const BraidWord& w);

/// Expands the form back into a word: Δ^p followed by each P(F_i).
BraidWord to_word(const NormalForm& nf);

/// Decides equality in B_n. Throws on braid index mismatch.
bool words_equal(const BraidWord& a, const BraidWord& b);

std::string to_string(const NormalForm& nf);

namespace garside {

/// Indices i with σ_i left-dividing P(π).
std::vector<int> starting_set(const Permutation& p);
/// Indices i with σ_i right-dividing P(π).
std::vector<int> finishing_set(const Permutation& p);
/// Start(right) ⊆ Finish(left).
bool is_left_weighted(const Permutation& left, const Permutation& right);

}  // namespace garside

}  // namespace petalgrid
