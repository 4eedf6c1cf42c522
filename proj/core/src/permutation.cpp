#include "petalgrid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace petalgrid {
namespace {

void check_bijective(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijective(images_);
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::vector<int>(images)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

Permutation compose(const Permutation& p1, const Permutation& p2) {
  if (p1.degree() != p2.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out(p2.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p1(p2.images_[i]);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::vector<int> interleave(std::span<const int> outer, std::span<const int> inner) {
  if (outer.size() != inner.size() + 1) {
    throw std::invalid_argument("interleave: expected lengths k+1 and k, got " +
                                std::to_string(outer.size()) + " and " +
                                std::to_string(inner.size()));
  }
  std::vector<int> out;
  out.reserve(outer.size() + inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out.push_back(outer[i]);
    out.push_back(inner[i]);
  }
  out.push_back(outer.back());
  return out;
}

Permutation interleave_permutation(std::span<const int> outer, std::span<const int> inner) {
  return Permutation(interleave(outer, inner));
}

IndexSubset::IndexSubset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n_ < 0) throw std::invalid_argument("subset ambient degree must be >= 0");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n_) {
      throw std::invalid_argument("subset member " + std::to_string(members_[i]) +
                                  " outside {1.." + std::to_string(n_) + "}");
    }
    if (i > 0 && members_[i] <= members_[i - 1]) {
      throw std::invalid_argument("subset members must be strictly increasing");
    }
  }
}

IndexSubset IndexSubset::range(int n, int lo, int hi) {
  std::vector<int> members;
  for (int v = lo; v <= hi; ++v) members.push_back(v);
  return IndexSubset(n, std::move(members));
}

bool IndexSubset::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!contains(v)) out.push_back(v);
  }
  return IndexSubset(n_, std::move(out));
}

Permutation order_bijection(const IndexSubset& a, const IndexSubset& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("degree mismatch");
  if (a.size() != b.size()) throw std::invalid_argument("subset size mismatch");
  const int n = a.ambient();
  std::vector<int> images(n);
  for (int i = 0; i < b.size(); ++i) images[b[i] - 1] = a[i];
  const IndexSubset ac = a.complement();
  const IndexSubset bc = b.complement();
  for (int i = 0; i < bc.size(); ++i) images[bc[i] - 1] = ac[i];
  return Permutation(std::move(images));
}

Permutation residue_perm(int n, int k) {
  if (n < 2 || k < 1 || k >= n) {
    throw std::invalid_argument("residue_perm requires 1 <= k < n");
  }
  if (std::gcd(n, k) != 1) throw std::invalid_argument("not coprime");
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = static_cast<int>((static_cast<long long>(k) * i - 1) % n) + 1;
  return Permutation(std::move(images));
}

IndexSubset image(const Permutation& p, const IndexSubset& s) {
  if (p.degree() != s.ambient()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.members()) out.push_back(p(v));
  std::sort(out.begin(), out.end());
  return IndexSubset(s.ambient(), std::move(out));
}

int ceil_div(int a, int b) {
  // b > 0 in every caller
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::vector<int> ceiling_sequence(int n, int k) {
  std::vector<int> out;
  for (int i = 1; i < k; ++i) out.push_back(ceil_div(n * i, k));
  return out;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  os << ')';
  return os.str();
}

}  // namespace petalgrid
