#include "petalgrid/petal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace petalgrid {

PetalPermutation::PetalPermutation(Permutation entries) : entries_(std::move(entries)) {
  const int p = entries_.degree();
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("petal permutation length must be odd and >= 3, got " +
                                std::to_string(p));
  }
}

std::vector<int> PetalPermutation::odd_terms() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); i += 2) out.push_back(entries_(i));
  return out;
}

std::vector<int> PetalPermutation::even_terms() const {
  std::vector<int> out;
  for (int i = 2; i <= length(); i += 2) out.push_back(entries_(i));
  return out;
}

std::string_view to_string(PetalClass c) {
  switch (c) {
    case PetalClass::strongly_braided:
      return "strongly_braided";
    case PetalClass::braided:
      return "braided";
    default:
      return "generic";
  }
}

PetalClass classify(const PetalPermutation& pp) {
  const int n = pp.half();
  if (pp[1] != n + 1) return PetalClass::generic;
  for (int i = 1; i <= n; ++i) {
    if (pp[2 * i + 1] > n || pp[2 * i] < n + 2) return PetalClass::generic;
  }
  for (int i = 0; i <= n; ++i) {
    if (pp[2 * i + 1] != n + 1 - i) return PetalClass::braided;
  }
  return PetalClass::strongly_braided;
}

PetalPermutation base_petal(int n) {
  if (n < 2) throw std::invalid_argument("base_petal requires n >= 2");
  std::vector<int> outer(n + 1);
  std::vector<int> inner(n);
  std::iota(outer.rbegin(), outer.rend(), 1);
  std::iota(inner.rbegin(), inner.rend(), n + 2);
  return PetalPermutation(interleave_permutation(outer, inner));
}

PetalPermutation stabilize(const PetalPermutation& pp, int k) {
  const int p = pp.length();
  if (k < 1 || k > pp.half()) {
    throw std::invalid_argument("stabilization index k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(pp.half()) + "]");
  }
  std::vector<int> out;
  out.reserve(p + 2);
  for (int i = 1; i <= p; ++i) {
    const int a = pp[i];
    if (a == k) {
      out.insert(out.end(), {k + 1, p + 2, k});
    } else {
      out.push_back(a > k ? a + 1 : a);
    }
  }
  return PetalPermutation(std::move(out));
}

PetalPermutation stabilize_fast(const PetalPermutation& pp, int k) {
  if (classify(pp) != PetalClass::strongly_braided) {
    throw std::invalid_argument("stabilize_fast requires a strongly braided petal permutation");
  }
  const int n = pp.half();
  if (k < 1 || k > n) {
    throw std::invalid_argument("stabilization index k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  std::vector<int> even = pp.even_terms();
  for (int& a : even) ++a;
  even.insert(even.end() - (k - 1), 2 * n + 3);
  std::vector<int> odd(n + 2);
  std::iota(odd.rbegin(), odd.rend(), 1);
  return PetalPermutation(interleave_permutation(odd, even));
}

void check_torus_pair(int n, int s) {
  if (n < 2 || s <= n) {
    throw std::invalid_argument("torus pair requires 2 <= n < s, got (" + std::to_string(n) +
                                ", " + std::to_string(s) + ")");
  }
  if (std::gcd(n, s) != 1) throw std::invalid_argument("not coprime");
}

std::vector<int> u_indices(int n, int s) {
  check_torus_pair(n, s);
  const int m = s / n;
  const int k = s - n * m;
  std::vector<int> out;
  for (int rep = 0; rep < m - 1; ++rep) {
    for (int i = 2; i <= n; ++i) out.push_back(i);
  }
  const std::vector<int> bands = ceiling_sequence(n, k);
  out.insert(out.end(), bands.begin(), bands.end());
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int petal_bound(int n, int s) { return 2 * s - 2 * (s / n) + 1; }

PetalPermutation synthesize(int n, int s) {
  PetalPermutation pp = base_petal(n);
  for (int k : u_indices(n, s)) {
#ifndef NDEBUG
    const PetalPermutation fast = stabilize_fast(pp, k);
#endif
    pp = stabilize(pp, k);
#ifndef NDEBUG
    if (!(fast == pp)) throw std::logic_error("stabilize_fast disagrees with stabilize");
#endif
  }
  return pp;
}

}  // namespace petalgrid
