#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "petalgrid_cli/commands.hpp"

namespace cli = petalgrid::cli;

int main(int argc, char** argv) {
  CLI::App app{"petal permutations and petal grid diagrams of torus knots"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "print the JSON payload instead of text");

  cli::SynthesizeOptions syn;
  auto* synthesize = app.add_subcommand("synthesize", "petal permutation of T(n,s)");
  synthesize->add_option("n", syn.n)->required();
  synthesize->add_option("s", syn.s)->required();
  synthesize->add_flag("--grid", syn.grid, "also print the petal grid");
  synthesize->add_option("--svg", syn.svg_path, "write the grid as SVG");

  cli::VerifyOptions ver;
  ver.max_crossings = petalgrid::max_crossings_from_env();
  std::string pipeline = "both";
  double timeout = 0;
  auto* verify = app.add_subcommand("verify", "certify the synthesized grid for T(n,s)");
  verify->add_option("n", ver.n)->required();
  verify->add_option("s", ver.s)->required();
  verify->add_option("--pipeline", pipeline, "pd, burau or both")
      ->check(CLI::IsMember({"pd", "burau", "both"}));
  auto* timeout_opt = verify->add_option("--timeout", timeout, "seconds before giving up")
                          ->check(CLI::PositiveNumber);

  cli::BraidOptions br;
  auto* braid = app.add_subcommand("braid", "braid word computations");
  braid->require_subcommand(1);
  auto* nf = braid->add_subcommand("nf", "left normal form");
  nf->add_option("-n", br.n, "braid index")->required();
  nf->add_option("word", br.words)->required()->expected(1);
  auto* equal = braid->add_subcommand("equal", "decide equality of two words");
  equal->add_option("-n", br.n, "braid index")->required();
  equal->add_option("words", br.words)->required()->expected(2);
  auto* conj = braid->add_subcommand("conjugacy", "conjugate delta^s into band form in B_n");
  conj->add_option("n", br.n)->required();
  conj->add_option("s", br.exponent)->required();

  cli::RenderOptions ren;
  std::string perm;
  auto* render = app.add_subcommand("render", "draw a petal grid");
  auto* perm_opt = render->add_option("--perm", perm, "petal permutation, e.g. 3,5,2,4,1");
  render->add_option("n", ren.n);
  render->add_option("s", ren.s);
  render->add_option("--svg", ren.svg_path, "write SVG instead of ASCII");

  cli::SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "run the identity suite");
  selftest->add_option("--max-n", st.max_n, "largest braid index for identity checks");
  selftest->add_option("--max-s", st.max_s, "largest s for the synthesis sweep");
  selftest->add_option("--trials", st.trials, "random instances per identity");
  selftest->add_option("--seed", st.seed, "random seed");
  selftest->add_flag("--inject-fault", st.inject_fault, "replace one identity by a false one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  cli::CommandResult result;
  if (*synthesize) {
    result = cli::cmd_synthesize(syn);
  } else if (*verify) {
    ver.pipeline = pipeline == "pd" ? petalgrid::Pipeline::pd
                   : pipeline == "burau" ? petalgrid::Pipeline::burau
                                         : petalgrid::Pipeline::both;
    if (*timeout_opt) ver.timeout_seconds = timeout;
    result = cli::cmd_verify(ver);
  } else if (*braid) {
    br.command = *nf ? cli::BraidCommand::nf : *equal ? cli::BraidCommand::equal : cli::BraidCommand::conjugacy;
    result = cli::cmd_braid(br);
  } else if (*render) {
    if (*perm_opt) {
      ren.perm = perm;
    } else if (ren.n == 0 || ren.s == 0) {
      std::cerr << "render: give --perm or n s\n";
      return cli::kUsage;
    }
    result = cli::cmd_render(ren);
  } else if (*selftest) {
    result = cli::cmd_selftest(st);
  }

  if (as_json) {
    std::cout << result.payload.dump(2) << '\n';
  } else if (result.exit_code == cli::kUsage) {
    std::cerr << result.text;
  } else {
    std::cout << result.text;
  }
  std::cout.flush();
  // Abandoned stages after a timeout may still be running; skip their cleanup.
  if (result.exit_code == cli::kTimeout) std::quick_exit(result.exit_code);
  return result.exit_code;
}
