#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "petalgrid/braid.hpp"

namespace petalgrid {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  // B_0 only appears as the empty factor of a split at k = n.
  if (n_ < 0) throw std::invalid_argument("braid index must be >= 0");
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > n_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(g) + " out of range for B_" +
                                  std::to_string(n_));
    }
  }
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int g) { return g > 0; });
}

BraidWord& BraidWord::append(const BraidWord& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("braid index mismatch");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord concat(std::initializer_list<BraidWord> words) {
  if (words.size() == 0) throw std::invalid_argument("concat of no words");
  BraidWord out(words.begin()->strands());
  for (const BraidWord& w : words) out.append(w);
  return out;
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, int e) {
  const BraidWord base = e < 0 ? inverse(w) : w;
  BraidWord out(w.strands());
  for (int i = 0; i < std::abs(e); ++i) out.append(base);
  return out;
}

BraidWord generator(int n, int i, int sign) {
  return BraidWord(n, {sign < 0 ? -i : i});
}

BraidWord delta(int n) { return descending(n, n); }

BraidWord big_delta(int n) {
  std::vector<int> letters;
  for (int j = 1; j < n; ++j) {
    for (int i = j; i >= 1; --i) letters.push_back(i);
  }
  return BraidWord(n, std::move(letters));
}

namespace {

void check_band_index(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("band index k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(n) + "]");
  }
}

}  // namespace

BraidWord descending(int n, int k) {
  check_band_index(n, k);
  std::vector<int> letters;
  for (int i = k - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord ascending(int n, int k) {
  check_band_index(n, k);
  std::vector<int> letters;
  for (int i = 1; i <= k - 1; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord round_trip(int n, int k) { return concat(descending(n, k), ascending(n, k)); }

BraidWord round_trip_product(const IndexSubset& a) {
  return round_trip_product(a.ambient(), a.members());
}

BraidWord round_trip_product(int n, std::span<const int> indices) {
  BraidWord out(n);
  for (int k : indices) out.append(round_trip(n, k));
  return out;
}

BraidWord named_braid(NamedBraid kind, int n, std::optional<int> k) {
  switch (kind) {
    case NamedBraid::delta:
      return delta(n);
    case NamedBraid::big_delta:
      return big_delta(n);
    default:
      break;
  }
  if (!k) throw std::invalid_argument("named braid requires k");
  switch (kind) {
    case NamedBraid::D:
      return descending(n, *k);
    case NamedBraid::E:
      return ascending(n, *k);
    default:
      return round_trip(n, *k);
  }
}

Permutation induced_permutation(const BraidWord& w) {
  std::vector<int> images(std::max(w.strands(), 1));
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(i) + 1;
  // π ∘ s_i swaps positions i and i+1 of the image list.
  for (int g : w.letters()) {
    const int i = std::abs(g);
    std::swap(images[i - 1], images[i]);
  }
  return Permutation(std::move(images));
}

BraidWord permutation_braid(const Permutation& p) {
  // Descending bubble passes: each swap peels σ_i off the right end of P(π).
  std::vector<int> q(p.images().begin(), p.images().end());
  const int n = p.degree();
  std::vector<int> peeled;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (int i = n - 1; i >= 1; --i) {
      if (q[i - 1] > q[i]) {
        std::swap(q[i - 1], q[i]);
        peeled.push_back(i);
        sorted = false;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return BraidWord(n, std::move(peeled));
}

BraidWord subset_braid(const IndexSubset& a, const IndexSubset& b, bool barred) {
  if (barred) return inverse(subset_braid(b, a, false));
  return permutation_braid(order_bijection(a, b));
}

BraidWord split(const BraidWord& alpha, const BraidWord& beta) {
  const int k = alpha.strands();
  std::vector<int> letters(alpha.letters().begin(), alpha.letters().end());
  for (int g : beta.letters()) letters.push_back(g > 0 ? g + k : g - k);
  return BraidWord(k + beta.strands(), std::move(letters));
}

BraidWord tau(const BraidWord& w) {
  const int n = w.strands();
  const bool shiftable = std::all_of(w.letters().begin(), w.letters().end(),
                                     [n](int g) { return std::abs(g) <= n - 2; });
  if (shiftable) {
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    for (int& g : letters) g += g > 0 ? 1 : -1;
    return BraidWord(n, std::move(letters));
  }
  const BraidWord d = delta(n);
  return concat({inverse(d), w, d});
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int g : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << std::abs(g);
    if (g < 0) os << "^-1";
  }
  return os.str();
}

BraidWord parse_braid(int n, std::string_view text) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse error at '" + token + "': " + why);
  };
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) fail("expected s<i>");
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    int index = 0;
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr == first) fail("expected generator index");
    int exponent = 1;
    if (ptr != last) {
      if (*ptr != '^') fail("unexpected character");
      ++ptr;
      auto [eptr, eec] = std::from_chars(ptr, last, exponent);
      if (eec != std::errc() || eptr != last || exponent == 0) fail("bad exponent");
    }
    if (index < 1 || index > n - 1) fail("generator outside B_" + std::to_string(n));
    for (int r = 0; r < std::abs(exponent); ++r) letters.push_back(exponent < 0 ? -index : index);
  }
  return BraidWord(n, std::move(letters));
}

PermutationBraidSplit decompose_permutation_braid(const Permutation& p, int k) {
  const int n = p.degree();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  const IndexSubset lower_block = IndexSubset::lowest(n, k);
  IndexSubset support = image(p.inverse(), lower_block);
  // p = π_{P1 ⊔ P2} ∘ π_{L,A}, so the stacked part is p ∘ π_{A,L}.
  const Permutation stacked = compose(p, order_bijection(support, lower_block));
  std::vector<int> low(stacked.images().begin(), stacked.images().begin() + k);
  std::vector<int> high;
  for (int i = k + 1; i <= n; ++i) high.push_back(stacked(i) - k);
  BraidWord upper(n - k);
  if (!high.empty()) upper = permutation_braid(Permutation(std::move(high)));
  return {permutation_braid(Permutation(std::move(low))), std::move(upper), std::move(support)};
}

}  // namespace petalgrid
