#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "petalgrid/garside.hpp"
#include "petalgrid/invariants.hpp"

namespace petalgrid::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kTimeout = 3 };

struct CommandResult {
  int exit_code = kPass;
  nlohmann::json payload;  ///< always carries "schema": 1
  std::string text;        ///< human-readable rendering of the payload
};

struct SynthesizeOptions {
  int n = 0;
  int s = 0;
  bool grid = false;
  std::string svg_path;
};

struct VerifyOptions {
  int n = 0;
  int s = 0;
  Pipeline pipeline = Pipeline::both;
  std::optional<double> timeout_seconds;
  int max_crossings = kDefaultMaxCrossings;
};

enum class BraidCommand { nf, equal, conjugacy };

struct BraidOptions {
  BraidCommand command = BraidCommand::nf;
  int n = 0;
  std::vector<std::string> words;  ///< nf: one word, equal: two
  int exponent = 0;                ///< conjugacy: δ^exponent in B_n
};

struct RenderOptions {
  std::optional<std::string> perm;  ///< "3,5,2,4,1"; otherwise n and s
  int n = 0;
  int s = 0;
  std::string svg_path;
};

struct SelftestOptions {
  int max_n = 9;
  int max_s = 30;
  int trials = 200;
  std::uint64_t seed = 20240611;
  bool inject_fault = false;
};

CommandResult cmd_synthesize(const SynthesizeOptions& opt);
CommandResult cmd_verify(const VerifyOptions& opt);
CommandResult cmd_braid(const BraidOptions& opt);
CommandResult cmd_render(const RenderOptions& opt);
CommandResult cmd_selftest(const SelftestOptions& opt);

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const BraidWord& w);
nlohmann::json to_json(const LaurentPolynomial& p);
nlohmann::json to_json(const PetalPermutation& pp, int n, int s);
nlohmann::json to_json(const GridDiagram& g);
nlohmann::json to_json(const PlanarDiagram& d);
nlohmann::json to_json(const NormalForm& nf);

/// "3,5,2,4,1" -> {3,5,2,4,1}; throws std::invalid_argument on malformed text.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace petalgrid::cli
