#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace petalgrid::cli {

struct IdentityCheck {
  std::string name;
  int passed = 0;
  int trials = 0;
  std::vector<std::string> failures;  ///< first few failing instances

  bool ok() const { return trials > 0 && passed == trials; }
};

struct SuiteConfig {
  int max_n = 9;        ///< braid index bound for the identity checks
  int max_s = 30;       ///< exponent bound for the synthesis sweep
  int trials = 200;     ///< randomized instances per identity
  std::uint64_t seed = 20240611;
  bool inject_fault = false;  ///< replaces one identity by a false one
};

/// The band-word identities, the subset-braid identities, the delta-power conjugacy over
/// all coprime pairs in range, and the synthesis length sweep.
std::vector<IdentityCheck> run_identity_suite(const SuiteConfig& config);

}  // namespace petalgrid::cli
