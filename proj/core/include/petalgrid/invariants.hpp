#pragma once

#include <optional>
#include <vector>

#include "petalgrid/braid.hpp"
#include "petalgrid/grid.hpp"
#include "petalgrid/laurent.hpp"
#include "petalgrid/laurent_matrix.hpp"
#include "petalgrid/petal.hpp"

namespace petalgrid {

/// (t^{ns} - 1)(t - 1) / ((t^n - 1)(t^s - 1)), normalized.
LaurentPolynomial torus_alexander(int n, int s);

inline constexpr int kDefaultMaxCrossings = 400;

/// kDefaultMaxCrossings unless PETALGRID_MAX_CROSSINGS holds a positive integer.
int max_crossings_from_env();

/// Normalized Alexander polynomial from the crossing/arc matrix of a knot
/// diagram (last row and column deleted). Throws std::invalid_argument
/// ("not a knot") for links and std::length_error past `max_crossings`.
LaurentPolynomial alexander_from_pd(const PlanarDiagram& d,
                                    int max_crossings = kDefaultMaxCrossings);

/// The c×c Alexander matrix: one row per crossing, one column per arc.
LaurentMatrix alexander_matrix(const PlanarDiagram& d);

/// Reduced Burau image of σ_i^{±1} in B_n, an (n-1)×(n-1) matrix.
LaurentMatrix reduced_burau_generator(int n, int letter);

/// Reduced Burau image of a braid word (identity for the empty word).
LaurentMatrix reduced_burau(const BraidWord& w);

/// det(I - ρ(w)) · (1 - t)/(1 - t^n), normalized. Throws std::invalid_argument
/// ("closure has multiple components") unless π_w is an n-cycle.
LaurentPolynomial alexander_from_closure(const BraidWord& w);

enum class Pipeline { pd, burau, both };

struct TorusPetalReport {
  int n = 0;
  int s = 0;
  PetalPermutation petal{std::vector<int>{2, 3, 1}};
  int length = 0;
  int bound = 0;
  bool grid_valid = false;
  std::vector<GridViolation> grid_violations;
  int crossings = 0;
  int writhe = 0;
  BraidWord closure_braid{1};  ///< δ (U_2⋯U_n)^m U_{a_1}⋯U_{a_{k-1}}
  LaurentPolynomial expected;
  std::optional<LaurentPolynomial> from_pd;
  std::optional<LaurentPolynomial> from_closure;
  bool verdict = false;
};

/// Synthesizes the petal permutation of T(n, s), checks its grid, and compares
/// the requested Alexander pipelines against the closed form up to units.
TorusPetalReport verify_torus_petal(int n, int s, Pipeline pipeline = Pipeline::both,
                                    int max_crossings = kDefaultMaxCrossings);

}  // namespace petalgrid
