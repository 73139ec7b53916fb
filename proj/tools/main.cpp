#include <iostream>

#include <CLI11.hpp>

#include "milnor/fixtures.hpp"
#include "milnor/verify.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2 };

struct Output {
  bool timing = true;
  bool machine = false;
  bool strict = false;
};

int emit(const milnor::Scenario& sc, const milnor::ScenarioReport& rep, const Output& out) {
  if (!out.machine) std::cout << rep.render_text(out.timing);
  std::cout << milnor::report_json(sc, rep, out.timing).dump(2) << '\n';
  const bool disagree = rep.formulas_agree.has_value() && !*rep.formulas_agree;
  if (out.strict && disagree) return kFailure;
  // Disagreement between formulas is report-only unless --strict; every
  // other failed check is a verification failure.
  for (const auto& v : rep.verdicts) {
    const bool agreement = v.name.size() >= 5 && v.name.compare(v.name.size() - 5, 5, "agree") == 0;
    if (!v.pass && (out.strict || !agreement)) return kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Milnor classes of singular hypersurfaces and their intersections"};
  app.require_subcommand(1);

  Output out;
  std::string file, formula = "all";
  auto* compute = app.add_subcommand("compute", "Run a scenario file");
  compute->add_option("file", file, "Scenario JSON file")->required();
  compute->add_option("--formula", formula, "thm41|cor11|cor12|pp|aluffi|le|all")
      ->check(CLI::IsMember({"thm41", "cor11", "cor12", "pp", "aluffi", "le", "all"}));
  compute->add_flag("--strict", out.strict, "Exit 1 when formulas disagree or any check fails");
  bool no_timing = false;
  compute->add_flag("--no-timing", no_timing, "Omit timing fields");
  compute->add_flag("--machine", out.machine, "Print only the JSON rendering");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--suite", suite, "ring|bundle|classes|lecycles|intersect|projbundle|all");
  verify->add_option("--seed", seed, "Random seed");
  bool verify_no_timing = false;
  verify->add_flag("--no-timing", verify_no_timing, "Omit timing fields");

  std::string run;
  auto* examples = app.add_subcommand("examples", "List or run the builtin examples");
  examples->add_option("--run", run, "Example name");
  examples->add_flag("--strict", out.strict, "Exit 1 when formulas disagree or any check fails");
  bool ex_no_timing = false;
  examples->add_flag("--no-timing", ex_no_timing, "Omit timing fields");
  examples->add_flag("--machine", out.machine, "Print only the JSON rendering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*compute) {
      out.timing = !no_timing;
      const milnor::Scenario sc = milnor::load_scenario_file(file);
      milnor::RunOptions opts{milnor::FormulaSelection::parse(formula), out.timing};
      return emit(sc, milnor::run_scenario(sc, opts), out);
    }
    if (*verify) {
      const auto results = milnor::run_suite(suite, seed);
      std::cout << milnor::render_suites(results, !verify_no_timing);
      for (const auto& r : results)
        if (!r.pass()) return kFailure;
      return kOk;
    }
    if (*examples) {
      out.timing = !ex_no_timing;
      if (run.empty()) {
        for (const auto& name : milnor::list_fixtures()) {
          const milnor::Fixture f = milnor::load_fixture(name);
          std::cout << name << "  " << f.content.value("description", "") << '\n';
        }
        return kOk;
      }
      const milnor::Fixture f = milnor::load_fixture(run);
      const milnor::Scenario sc = f.scenario();
      return emit(sc, milnor::run_scenario(sc, {milnor::FormulaSelection::all(), out.timing}), out);
    }
  } catch (const milnor::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const milnor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
