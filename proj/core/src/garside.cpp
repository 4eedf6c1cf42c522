#include "petalgrid/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace petalgrid {
namespace {

// Simple elements are handled as raw 0-based image vectors holding 1-based values.
using Simple = std::vector<int>;

Simple identity_simple(int n) {
  Simple s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

bool is_identity(const Simple& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_half_twist(const Simple& s) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    if (s[i] != n - i) return false;
  }
  return true;
}

// Δ F Δ^{-1}: conjugation by the half twist, σ_i <-> σ_{n-i}.
Simple flip(const Simple& s) {
  const int n = static_cast<int>(s.size());
  Simple out(n);
  for (int i = 0; i < n; ++i) out[i] = n + 1 - s[n - 1 - i];
  return out;
}

Simple inverse_of(const Simple& s) {
  Simple inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[s[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

// Moves generators from the front of `right` to the back of `left` until
// Start(right) ⊆ Finish(left). Returns whether anything moved.
bool left_weight(Simple& left, Simple& right) {
  const int n = static_cast<int>(left.size());
  bool moved = false;
  Simple right_inv = inverse_of(right);
  for (;;) {
    int candidate = -1;
    for (int i = 1; i < n; ++i) {
      const bool starts_right = right_inv[i] < right_inv[i - 1];  // value i+1 before value i
      const bool finishes_left = left[i - 1] > left[i];
      if (starts_right && !finishes_left) {
        candidate = i;
        break;
      }
    }
    if (candidate < 0) return moved;
    const int i = candidate;
    // left <- left ∘ s_i ; right <- s_i ∘ right
    std::swap(left[i - 1], left[i]);
    std::swap(right[right_inv[i - 1] - 1], right[right_inv[i] - 1]);
    std::swap(right_inv[i - 1], right_inv[i]);
    moved = true;
  }
}

class FormBuilder {
 public:
  FormBuilder(int n, int delta_power) : n_(n), delta_power_(delta_power) {}

  void push(Simple x) {
    factors_.push_back(std::move(x));
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (!left_weight(factors_[j - 1], factors_[j])) break;
    }
    tidy();
  }

  NormalForm finish() {
    // One sweep per insertion is enough in theory; keep going until every
    // pair is verified left-weighted so the output never depends on it.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = factors_.size(); j-- > 1;) {
        if (left_weight(factors_[j - 1], factors_[j])) changed = true;
      }
      changed = tidy() || changed;
    }
    NormalForm nf;
    nf.strands = n_;
    nf.delta_power = delta_power_;
    nf.factors.reserve(factors_.size());
    for (Simple& f : factors_) nf.factors.emplace_back(std::move(f));
    return nf;
  }

 private:
  // Drops identity factors and pulls Δ factors out to the front.
  bool tidy() {
    bool changed = false;
    for (std::size_t j = 0; j < factors_.size();) {
      if (is_identity(factors_[j])) {
        factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else if (is_half_twist(factors_[j])) {
        // F_0 ⋯ F_{j-1} Δ = Δ flip(F_0) ⋯ flip(F_{j-1})
        for (std::size_t i = 0; i < j; ++i) factors_[i] = flip(factors_[i]);
        factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(j));
        ++delta_power_;
        changed = true;
      } else {
        ++j;
      }
    }
    return changed;
  }

  int n_;
  int delta_power_;
  std::vector<Simple> factors_;
};

}  // namespace

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  if (n <= 1) return NormalForm{n, 0, {}};

  // σ_i^{-1} = Δ^{-1} (Δ σ_i^{-1}); every Δ^{-1} is then moved to the front,
  // conjugating each factor it passes by Δ.
  const auto letters = w.letters();
  const int negatives = static_cast<int>(
      std::count_if(letters.begin(), letters.end(), [](int g) { return g < 0; }));
  FormBuilder builder(n, -negatives);
  int negatives_after = negatives;
  for (int g : letters) {
    const int i = std::abs(g);
    Simple x = identity_simple(n);
    if (g > 0) {
      std::swap(x[i - 1], x[i]);
    } else {
      --negatives_after;
      // π_Δ ∘ s_i
      for (int j = 0; j < n; ++j) x[j] = n - j;
      std::swap(x[i - 1], x[i]);
    }
    if (negatives_after % 2 != 0) x = flip(x);
    builder.push(std::move(x));
  }
  return builder.finish();
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord out = power(big_delta(std::max(nf.strands, 1)), nf.delta_power);
  if (nf.strands < 1) return BraidWord(nf.strands);
  for (const Permutation& f : nf.factors) out.append(permutation_braid(f));
  return out;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid index mismatch");
  if (a == b) return true;
  return left_normal_form(a) == left_normal_form(b);
}

std::string to_string(const NormalForm& nf) {
  std::ostringstream os;
  os << "D^" << nf.delta_power;
  for (const Permutation& f : nf.factors) os << ' ' << to_string(f);
  return os.str();
}

namespace garside {

std::vector<int> starting_set(const Permutation& p) {
  const Permutation inv = p.inverse();
  std::vector<int> out;
  for (int i = 1; i < p.degree(); ++i) {
    if (inv(i + 1) < inv(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> finishing_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.degree(); ++i) {
    if (p(i) > p(i + 1)) out.push_back(i);
  }
  return out;
}

bool is_left_weighted(const Permutation& left, const Permutation& right) {
  const std::vector<int> start = starting_set(right);
  const std::vector<int> finish = finishing_set(left);
  return std::includes(finish.begin(), finish.end(), start.begin(), start.end());
}

}  // namespace garside

}  // namespace petalgrid
