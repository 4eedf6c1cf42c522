#include "petalgrid_cli/identity_suite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "petalgrid/conjugacy.hpp"
#include "petalgrid/garside.hpp"
#include "petalgrid/grid.hpp"
#include "petalgrid/petal.hpp"

namespace petalgrid::cli {
namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  BraidWord word(int n, int max_len) {
    BraidWord w(n);
    if (n < 2) return w;
    const int len = uniform(0, max_len);
    std::vector<int> letters;
    for (int j = 0; j < len; ++j) letters.push_back(uniform(1, n - 1) * (uniform(0, 1) ? 1 : -1));
    return BraidWord(n, std::move(letters));
  }

  IndexSubset subset(int n, int k) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return IndexSubset(n, std::move(all));
  }

  Permutation permutation(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng_);
    return Permutation(std::move(images));
  }

 private:
  std::mt19937_64 rng_;
};

IndexSubset lower_set(int n, int k) { return IndexSubset::lowest(n, k); }
IndexSubset upper_set(int n, int k) { return IndexSubset::highest(n, k); }

std::string describe(const IndexSubset& a) {
  std::string out = "{";
  for (int v : a.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

BraidWord stacked(const BraidWord& alpha, int n) {
  return split(alpha, BraidWord(n - alpha.strands()));
}

struct Runner {
  Sampler& sample;
  std::vector<IdentityCheck>& out;

  // Each instance is checked inside a random two-sided context u·(lhs)·v, so
  // repeated parameter choices still exercise different normal forms.
  void randomized(const std::string& name, int trials,
                  const std::function<std::pair<BraidWord, BraidWord>(std::string&)>& make) {
    IdentityCheck check;
    check.name = name;
    for (int t = 0; t < trials; ++t) {
      std::string label;
      auto [lhs, rhs] = make(label);
      const int n = lhs.strands();
      const BraidWord u = sample.word(n, 6);
      const BraidWord v = sample.word(n, 6);
      ++check.trials;
      if (words_equal(concat({u, lhs, v}), concat({u, rhs, v}))) {
        ++check.passed;
      } else if (check.failures.size() < 5) {
        check.failures.push_back(label);
      }
    }
    out.push_back(std::move(check));
  }

  void exhaustive(const std::string& name, const std::function<void(IdentityCheck&)>& body) {
    IdentityCheck check;
    check.name = name;
    body(check);
    out.push_back(std::move(check));
  }
};

void record(IdentityCheck& check, bool ok, const std::string& label) {
  ++check.trials;
  if (ok) {
    ++check.passed;
  } else if (check.failures.size() < 5) {
    check.failures.push_back(label);
  }
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const SuiteConfig& config) {
  Sampler sample(config.seed);
  std::vector<IdentityCheck> out;
  Runner run{sample, out};
  const int max_n = std::max(config.max_n, 3);
  const int trials = config.trials;

  run.randomized("D_k and E_k shift generators", trials, [&](std::string& label) {
    const int n = sample.uniform(3, max_n);
    const int k = sample.uniform(3, n);
    const int i = sample.uniform(1, k - 2);
    label = nk(n, k) + " i=" + std::to_string(i);
    const BraidWord si = generator(n, i);
    const BraidWord si1 = generator(n, i + 1);
    if (sample.uniform(0, 1) == 0) return std::pair{si * descending(n, k), descending(n, k) * si1};
    return std::pair{si1 * ascending(n, k), ascending(n, k) * si};
  });

  run.randomized("U_k commutes with sigma_i, i <= k-2", trials, [&](std::string& label) {
    const int n = sample.uniform(3, max_n);
    const int k = sample.uniform(3, n);
    const int i = sample.uniform(1, k - 2);
    label = nk(n, k) + " i=" + std::to_string(i);
    const BraidWord u = round_trip(n, k);
    return std::pair{u * generator(n, i), generator(n, i) * u};
  });

  run.randomized("U_k commutes with D_i, E_i, U_i, i < k", trials, [&](std::string& label) {
    const int n = sample.uniform(3, max_n);
    const int k = sample.uniform(3, n);
    const int i = sample.uniform(2, k - 1);
    label = nk(n, k) + " i=" + std::to_string(i);
    const BraidWord u = round_trip(n, k);
    const BraidWord other = std::array{descending(n, i), ascending(n, i), round_trip(n, i)}[sample.uniform(0, 2)];
    return std::pair{u * other, other * u};
  });

  run.randomized("U(A) = (D_a1..D_ak)(E_ak..E_a1)", trials, [&](std::string& label) {
    const int n = sample.uniform(3, max_n);
    const int k = sample.uniform(1, n - 1);
    // a_1 >= 2: draw from {2..n}
    const IndexSubset shifted = sample.subset(n - 1, k);
    std::vector<int> members;
    for (int a : shifted.members()) members.push_back(a + 1);
    const IndexSubset a(n, members);
    label = "n=" + std::to_string(n) + " A=" + describe(a);
    BraidWord d(n);
    BraidWord e(n);
    for (int j = 0; j < k; ++j) {
      d.append(descending(n, a[j]));
      e.append(ascending(n, a[k - 1 - j]));
    }
    return std::pair{round_trip_product(a), d * e};
  });

  run.randomized("Delta^2 = delta^n = U_2..U_n", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    label = "n=" + std::to_string(n);
    BraidWord twist(n);
    for (int i = 2; i <= n; ++i) twist.append(round_trip(n, i));
    const BraidWord dd = power(big_delta(n), 2);
    switch (sample.uniform(0, 2)) {
      case 0: return std::pair{dd, power(delta(n), n)};
      case 1: return std::pair{dd, twist};
      default: return std::pair{power(delta(n), n), twist};
    }
  });

  run.randomized("X_{T,A} X_{A,L} = X_{T,L}", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n - 1);
    const IndexSubset a = sample.subset(n, k);
    const IndexSubset l = lower_set(n, k);
    const IndexSubset t = upper_set(n, k);
    label = "n=" + std::to_string(n) + " A=" + describe(a);
    return std::pair{subset_braid(t, a) * subset_braid(a, l), subset_braid(t, l)};
  });

  run.randomized("X_{T,L} (a + b) = (b + a) X_{T,L}", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n - 1);
    const BraidWord alpha = sample.word(k, 8);
    const BraidWord beta = sample.word(n - k, 8);
    const BraidWord x = subset_braid(upper_set(n, k), lower_set(n, k));
    label = nk(n, k) + " a=" + to_string(alpha) + " b=" + to_string(beta);
    return std::pair{x * split(alpha, beta), split(beta, alpha) * x};
  });

  run.randomized("P(p) = (P_1 + P_2) X_{L,A}", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n);
    const Permutation p = sample.permutation(n);
    const PermutationBraidSplit d = decompose_permutation_braid(p, k);
    label = to_string(p) + " k=" + std::to_string(k);
    auto reduced = [](const BraidWord& w) {
      return w.is_positive() && static_cast<int>(w.length()) == induced_permutation(w).inversions();
    };
    BraidWord rhs = split(d.lower, d.upper) * subset_braid(lower_set(n, k), d.support);
    // A factor that is not a permutation braid fails the instance outright.
    if (!reduced(d.lower) || !reduced(d.upper)) rhs = rhs * generator(n, 1);
    return std::pair{permutation_braid(p), rhs};
  });

  run.randomized("D/E products through X_{A,L}", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n);
    const IndexSubset a = sample.subset(n, k);
    const IndexSubset l = lower_set(n, k);
    const BraidWord half = stacked(big_delta(k), n);
    label = "n=" + std::to_string(n) + " A=" + describe(a);
    BraidWord d(n);
    BraidWord e(n);
    for (int j = 0; j < k; ++j) {
      d.append(descending(n, a[j]));
      e.append(ascending(n, a[k - 1 - j]));
    }
    switch (sample.uniform(0, 2)) {
      case 0: return std::pair{d, subset_braid(a, l) * half};
      case 1: return std::pair{e, half * subset_braid(l, a)};
      default:
        return std::pair{round_trip_product(a),
                         concat({subset_braid(a, l), stacked(power(big_delta(k), 2), n), subset_braid(l, a)})};
    }
  });

  run.randomized("delta^k = X_{T,L} (Delta_k^2 + 1)", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n);
    label = nk(n, k);
    return std::pair{power(delta(n), k),
                     subset_braid(upper_set(n, k), lower_set(n, k)) * stacked(power(big_delta(k), 2), n)};
  });

  run.randomized("delta^k (a + b) = (b + a) delta^k", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n - 1);
    const BraidWord alpha = sample.word(k, 8);
    const BraidWord beta = sample.word(n - k, 8);
    label = nk(n, k) + " a=" + to_string(alpha) + " b=" + to_string(beta);
    return std::pair{power(delta(n), k) * split(alpha, beta), split(beta, alpha) * power(delta(n), k)};
  });

  run.randomized("U(A) = Xbar_{A,T} delta^k X_{L,A}", trials, [&](std::string& label) {
    const int n = sample.uniform(2, max_n);
    const int k = sample.uniform(1, n);
    const IndexSubset a = sample.subset(n, k);
    label = "n=" + std::to_string(n) + " A=" + describe(a);
    const int e = config.inject_fault ? k + 1 : k;
    return std::pair{round_trip_product(a),
                     concat({subset_braid(a, upper_set(n, k), true), power(delta(n), e),
                             subset_braid(lower_set(n, k), a)})};
  });

  run.exhaustive("X_k^-1 delta^k X_k = delta U_a1..U_a(k-1)", [&](IdentityCheck& check) {
    for (int n = 3; n <= max_n; ++n) {
      for (int k = 2; k < n; ++k) {
        if (std::gcd(n, k) != 1) continue;
        record(check, delta_power_witness(n, k).verified, nk(n, k));
      }
    }
  });

  run.exhaustive("pi_k maps {ceil(ni/k)} onto L", [&](IdentityCheck& check) {
    for (int n = 3; n <= std::max(max_n, 12); ++n) {
      for (int k = 2; k < n; ++k) {
        if (std::gcd(n, k) != 1) continue;
        const IndexSubset a(n, ceiling_sequence(n, k));
        record(check, image(residue_perm(n, k), a) == lower_set(n, k - 1), nk(n, k));
      }
    }
  });

  run.exhaustive("alpha_k is pure", [&](IdentityCheck& check) {
    for (int n = 3; n <= std::max(max_n, 12); ++n) {
      for (int k = 2; k < n; ++k) {
        if (std::gcd(n, k) != 1) continue;
        record(check, induced_permutation(residue_pure_braid(n, k)).is_identity(), nk(n, k));
      }
    }
  });

  run.exhaustive("synthesis meets 2s - 2[s/n] + 1", [&](IdentityCheck& check) {
    for (int s = 3; s <= config.max_s; ++s) {
      for (int n = 2; n < s; ++n) {
        if (std::gcd(n, s) != 1) continue;
        const PetalPermutation pp = synthesize(n, s);
        bool ok = pp.length() == petal_bound(n, s) && classify(pp) == PetalClass::strongly_braided &&
                  validate_petal_grid(build_petal_grid(pp)).valid;
        if (s < 2 * n) ok = ok && pp.length() == 2 * s - 1;
        record(check, ok, "n=" + std::to_string(n) + " s=" + std::to_string(s));
      }
    }
  });

  return out;
}

}  // namespace petalgrid::cli
