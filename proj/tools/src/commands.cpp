#include "petalgrid_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "petalgrid/conjugacy.hpp"
#include "petalgrid_cli/identity_suite.hpp"

namespace petalgrid::cli {

using nlohmann::json;

namespace {

json envelope() { return json{{"schema", 1}}; }

CommandResult failure(int code, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.payload = envelope();
  r.payload["error"] = message;
  r.text = "error: " + message + "\n";
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string pair_name(int n, int s) { return "T(" + std::to_string(n) + "," + std::to_string(s) + ")"; }

std::string band_text(const ConjugacyWitness& w) {
  std::ostringstream os;
  os << "delta";
  if (w.full_twists > 0) {
    os << " (U_2..U_" << w.strands << ")";
    if (w.full_twists > 1) os << '^' << w.full_twists;
  }
  for (int a : w.band_indices) os << " U_" << a;
  return os.str();
}

json witness_json(const ConjugacyWitness& w) {
  return json{{"n", w.strands},
              {"s", w.exponent},
              {"m", w.full_twists},
              {"k", w.remainder},
              {"band_indices", w.band_indices},
              {"conjugator", to_json(w.conjugator)},
              {"rhs", to_json(w.rhs)},
              {"rhs_text", band_text(w)},
              {"verified", w.verified}};
}

// Runs `fn` on its own thread. The task owns its state, so abandoning the
// future after a timeout is safe; the thread finishes in the background.
template <class Fn>
auto launch(Fn fn) {
  using R = decltype(fn());
  auto task = std::make_shared<std::packaged_task<R()>>(std::move(fn));
  auto future = task->get_future();
  std::thread([task] { (*task)(); }).detach();
  return future;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream is(cleaned);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: " + text);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("malformed integer list: " + text);
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

json to_json(const Permutation& p) {
  return json(std::vector<int>(p.images().begin(), p.images().end()));
}

json to_json(const BraidWord& w) {
  return json{{"n", w.strands()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

json to_json(const LaurentPolynomial& p) {
  json arr = json::array();
  for (const Integer& c : p.coeffs()) {
    // Integers that fit in 64 bits stay numbers; anything wider is a string.
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      arr.push_back(static_cast<long long>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return json{{"min_exp", p.min_exp()}, {"coeffs", arr}, {"text", to_string(p)}};
}

json to_json(const PetalPermutation& pp, int n, int s) {
  return json{{"n", n},
              {"s", s},
              {"length", pp.length()},
              {"petal_permutation", to_json(pp.entries())},
              {"odd", pp.odd_terms()},
              {"even", pp.even_terms()}};
}

json to_json(const GridDiagram& g) {
  json nodes = json::array();
  for (const GridPoint& p : g.nodes) nodes.push_back({p.x, p.y});
  auto edges = [](const std::vector<GridEdge>& es) {
    json arr = json::array();
    for (const GridEdge& e : es) arr.push_back({e.a + 1, e.b + 1});
    return arr;
  };
  std::vector<int> traversal;
  for (int v : g.traversal) traversal.push_back(v + 1);
  return json{{"size", g.size},
              {"nodes", nodes},
              {"horizontal", edges(g.horizontal)},
              {"vertical", edges(g.vertical)},
              {"traversal", traversal}};
}

json to_json(const PlanarDiagram& d) {
  json pd = json::array();
  for (const Crossing& c : d.crossings) {
    pd.push_back({{"edges", c.pd},
                  {"sign", c.sign},
                  {"over_arc", c.over_arc + 1},
                  {"under_in_arc", c.under_in_arc + 1},
                  {"under_out_arc", c.under_out_arc + 1},
                  {"at", {c.at.x, c.at.y}}});
  }
  return json{{"crossings", d.crossings.size()},
              {"arcs", d.arc_count},
              {"components", d.components},
              {"writhe", d.writhe()},
              {"pd", pd}};
}

json to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const Permutation& f : nf.factors) factors.push_back(to_json(f));
  return json{{"n", nf.strands}, {"delta_power", nf.delta_power}, {"factors", factors}};
}

CommandResult cmd_synthesize(const SynthesizeOptions& opt) {
  try {
    check_torus_pair(opt.n, opt.s);
    const PetalPermutation pp = synthesize(opt.n, opt.s);
    CommandResult r;
    r.payload = envelope();
    r.payload.update(to_json(pp, opt.n, opt.s));
    r.payload["bound"] = petal_bound(opt.n, opt.s);
    r.payload["class"] = std::string(to_string(classify(pp)));
    r.payload["u_indices"] = u_indices(opt.n, opt.s);

    std::ostringstream os;
    os << pair_name(opt.n, opt.s) << " petal permutation " << to_string(pp.entries()) << '\n'
       << "length " << pp.length() << ", bound " << petal_bound(opt.n, opt.s) << '\n';
    if (opt.grid || !opt.svg_path.empty()) {
      const GridDiagram g = build_petal_grid(pp);
      if (opt.grid) {
        r.payload["grid"] = to_json(g);
        r.payload["ascii"] = render_ascii(g);
        os << render_ascii(g);
      }
      if (!opt.svg_path.empty()) {
        write_file(opt.svg_path, render_svg(g));
        r.payload["svg_path"] = opt.svg_path;
        os << "wrote " << opt.svg_path << '\n';
      }
    }
    r.text = os.str();
    return r;
  } catch (const std::invalid_argument& e) {
    return failure(kUsage, e.what());
  } catch (const std::runtime_error& e) {
    return failure(kUsage, e.what());
  }
}

CommandResult cmd_verify(const VerifyOptions& opt) {
  try {
    check_torus_pair(opt.n, opt.s);
  } catch (const std::invalid_argument& e) {
    return failure(kUsage, e.what());
  }
  const int n = opt.n;
  const int s = opt.s;
  const Pipeline pipeline = opt.pipeline;
  const int max_crossings = opt.max_crossings;

  auto report_future = launch([=] { return verify_torus_petal(n, s, pipeline, max_crossings); });
  auto witness_future = launch([=] { return torus_conjugacy_witness(n, s); });

  using Clock = std::chrono::steady_clock;
  const auto deadline =
      opt.timeout_seconds
          ? Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opt.timeout_seconds))
          : Clock::time_point::max();
  auto ready = [&](auto& f) {
    if (deadline == Clock::time_point::max()) {
      f.wait();
      return true;
    }
    return f.wait_until(deadline) == std::future_status::ready;
  };

  CommandResult r;
  r.payload = envelope();
  r.payload["n"] = n;
  r.payload["s"] = s;
  std::ostringstream os;
  os << "verify " << pair_name(n, s) << '\n';
  bool ok = true;
  bool timed_out = false;

  if (ready(report_future)) {
    try {
      const TorusPetalReport rep = report_future.get();
      json& j = r.payload["petal"];
      j = to_json(rep.petal, n, s);
      j["bound"] = rep.bound;
      j["class"] = std::string(to_string(classify(rep.petal)));
      j["grid_valid"] = rep.grid_valid;
      json violations = json::array();
      for (const GridViolation& v : rep.grid_violations) violations.push_back(v.message);
      j["grid_violations"] = violations;
      if (rep.from_pd) {
        j["crossings"] = rep.crossings;
        j["writhe"] = rep.writhe;
      }
      json& a = r.payload["alexander"];
      a["expected"] = to_json(rep.expected);
      a["pd"] = rep.from_pd ? to_json(*rep.from_pd) : json(nullptr);
      a["closure"] = rep.from_closure ? to_json(*rep.from_closure) : json(nullptr);
      r.payload["closure_braid"] = to_json(rep.closure_braid);
      r.payload["verdict"] = rep.verdict;
      ok = ok && rep.verdict;

      os << "  petal permutation " << to_string(rep.petal.entries()) << '\n'
         << "  length " << rep.length << " (bound " << rep.bound << "), "
         << to_string(classify(rep.petal)) << ", grid " << (rep.grid_valid ? "valid" : "INVALID") << '\n';
      for (const GridViolation& v : rep.grid_violations) os << "    " << v.message << '\n';
      os << "  alexander (closed form) " << to_string(rep.expected) << '\n';
      if (rep.from_pd) {
        os << "  alexander (diagram, " << rep.crossings << " crossings, writhe " << rep.writhe << ") "
           << to_string(*rep.from_pd) << '\n';
      }
      if (rep.from_closure) os << "  alexander (braid closure) " << to_string(*rep.from_closure) << '\n';
      os << "  polynomials " << (rep.verdict ? "agree" : "DISAGREE") << '\n';
    } catch (const std::length_error& e) {
      return failure(kUsage, e.what());
    } catch (const std::exception& e) {
      r.payload["petal_error"] = e.what();
      os << "  petal check failed: " << e.what() << '\n';
      ok = false;
    }
  } else {
    timed_out = true;
    r.payload["petal"] = nullptr;
    os << "  petal check timed out\n";
  }

  if (ready(witness_future)) {
    const ConjugacyWitness w = witness_future.get();
    r.payload["conjugacy"] = witness_json(w);
    ok = ok && w.verified;
    os << "  conjugator X_" << w.remainder << " = " << to_string(w.conjugator) << '\n'
       << "  delta^" << s << " ~ " << band_text(w) << ": " << (w.verified ? "verified" : "NOT VERIFIED")
       << '\n';
  } else {
    timed_out = true;
    r.payload["conjugacy"] = nullptr;
    os << "  conjugacy check timed out\n";
  }

  r.payload["timed_out"] = timed_out;
  r.payload["passed"] = ok && !timed_out;
  r.exit_code = timed_out ? kTimeout : (ok ? kPass : kCheckFailed);
  os << (timed_out ? "TIMEOUT" : ok ? "PASS" : "FAIL") << '\n';
  r.text = os.str();
  return r;
}

CommandResult cmd_braid(const BraidOptions& opt) {
  try {
    CommandResult r;
    r.payload = envelope();
    std::ostringstream os;
    switch (opt.command) {
      case BraidCommand::nf: {
        if (opt.words.size() != 1) return failure(kUsage, "nf takes exactly one word");
        const BraidWord w = parse_braid(opt.n, opt.words[0]);
        const NormalForm nf = left_normal_form(w);
        r.payload["word"] = to_json(w);
        r.payload["normal_form"] = to_json(nf);
        r.payload["text"] = to_string(nf);
        os << to_string(nf) << '\n';
        break;
      }
      case BraidCommand::equal: {
        if (opt.words.size() != 2) return failure(kUsage, "equal takes exactly two words");
        const BraidWord a = parse_braid(opt.n, opt.words[0]);
        const BraidWord b = parse_braid(opt.n, opt.words[1]);
        const NormalForm fa = left_normal_form(a);
        const NormalForm fb = left_normal_form(b);
        const bool equal = fa == fb;
        r.payload["equal"] = equal;
        r.payload["normal_forms"] = {to_json(fa), to_json(fb)};
        os << (equal ? "equal" : "not equal") << '\n'
           << "  " << to_string(fa) << '\n'
           << "  " << to_string(fb) << '\n';
        r.exit_code = equal ? kPass : kCheckFailed;
        break;
      }
      case BraidCommand::conjugacy: {
        const ConjugacyWitness w = delta_power_witness(opt.n, opt.exponent);
        r.payload.update(witness_json(w));
        os << "X_" << w.remainder << " = " << to_string(w.conjugator) << '\n'
           << "delta^" << opt.exponent << " ~ " << band_text(w) << '\n'
           << "rhs = " << to_string(w.rhs) << '\n'
           << (w.verified ? "verified" : "NOT VERIFIED") << '\n';
        r.exit_code = w.verified ? kPass : kCheckFailed;
        break;
      }
    }
    r.text = os.str();
    return r;
  } catch (const std::invalid_argument& e) {
    return failure(kUsage, e.what());
  }
}

CommandResult cmd_render(const RenderOptions& opt) {
  try {
    std::optional<PetalPermutation> pp;
    if (opt.perm) {
      pp.emplace(parse_int_list(*opt.perm));
    } else {
      check_torus_pair(opt.n, opt.s);
      pp.emplace(synthesize(opt.n, opt.s));
    }
    const GridDiagram g = build_petal_grid(*pp);
    CommandResult r;
    r.payload = envelope();
    r.payload["petal_permutation"] = to_json(pp->entries());
    r.payload["grid"] = to_json(g);
    if (opt.svg_path.empty()) {
      r.text = render_ascii(g);
      r.payload["ascii"] = r.text;
    } else {
      write_file(opt.svg_path, render_svg(g));
      r.payload["svg_path"] = opt.svg_path;
      r.text = "wrote " + opt.svg_path + "\n";
    }
    return r;
  } catch (const std::invalid_argument& e) {
    return failure(kUsage, e.what());
  } catch (const std::runtime_error& e) {
    return failure(kUsage, e.what());
  }
}

CommandResult cmd_selftest(const SelftestOptions& opt) {
  if (opt.max_n < 3 || opt.max_s < 3 || opt.trials < 1) {
    return failure(kUsage, "selftest needs --max-n >= 3, --max-s >= 3 and --trials >= 1");
  }
  const std::vector<IdentityCheck> checks = run_identity_suite({.max_n = opt.max_n,
                                                                .max_s = opt.max_s,
                                                                .trials = opt.trials,
                                                                .seed = opt.seed,
                                                                .inject_fault = opt.inject_fault});
  CommandResult r;
  r.payload = envelope();
  r.payload["seed"] = opt.seed;
  json rows = json::array();
  std::ostringstream os;
  bool ok = true;
  for (const IdentityCheck& c : checks) {
    ok = ok && c.ok();
    rows.push_back({{"name", c.name}, {"passed", c.passed}, {"trials", c.trials}, {"failures", c.failures}});
    os << (c.ok() ? "PASS  " : "FAIL  ") << c.name << "  " << c.passed << '/' << c.trials << '\n';
    for (const std::string& f : c.failures) os << "      " << f << '\n';
  }
  r.payload["checks"] = rows;
  r.payload["passed"] = ok;
  r.exit_code = ok ? kPass : kCheckFailed;
  r.text = os.str();
  return r;
}

}  // namespace petalgrid::cli
