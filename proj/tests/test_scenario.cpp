#include <gtest/gtest.h>

#include "milnor/fixtures.hpp"

using namespace milnor;

namespace {

nlohmann::json base() {
  return nlohmann::json::parse(R"json({
    "name": "t",
    "ambient": {"kind": "proj", "dim": 3},
    "hypersurfaces": [
      {"name": "P", "degree": 2,
       "strata": [{"name": "regular", "open": true},
                  {"name": "axis", "closure": "linear(1)", "milnor_fiber_chi": 0}]},
      {"name": "H", "degree": 1}
    ],
    "intersection": {"of": ["P", "H"]}
  })json");
}

std::string field_of(const nlohmann::json& j) {
  try {
    parse_scenario(j);
  } catch (const InputError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST(Scenario, ParsesAndRuns) {
  const Scenario sc = parse_scenario(base());
  EXPECT_EQ(sc.hypersurfaces.size(), 2u);
  const ScenarioReport rep = run_scenario(sc, {FormulaSelection::all(), false});
  ASSERT_NE(rep.find_class("X.milnor"), nullptr);
  EXPECT_EQ(rep.find_class("X.milnor")->str(), "h^3");
  EXPECT_TRUE(rep.all_pass());
}

TEST(Scenario, ErrorsNameTheField) {
  auto j = base();
  j["hypersurfaces"][0]["strata"][1]["contained_in"] = {"nowhere"};
  EXPECT_EQ(field_of(j), "hypersurfaces[0].strata[1].contained_in");

  j = base();
  j["intersection"]["of"][1] = "K";
  EXPECT_EQ(field_of(j), "intersection.of[1]");

  j = base();
  j["ambient"]["kind"] = "grassmannian";
  EXPECT_EQ(field_of(j), "ambient.kind");

  j = base();
  j["hypersurfaces"][0]["strata"][1]["closure"] = "conic";
  EXPECT_EQ(field_of(j), "hypersurfaces[0].strata[1].closure");

  j = base();
  j["hypersurfaces"][1]["segre"] = "jacobian";
  EXPECT_EQ(field_of(j), "hypersurfaces[1].segre");

  j = base();
  j["bogus"] = 1;
  EXPECT_EQ(field_of(j), ".bogus");

  j = base();
  j["tasks"] = {{{"compute", "everything"}}};
  EXPECT_EQ(field_of(j), "tasks[0].compute");

  j = base();
  j["hypersurfaces"][1]["name"] = "P";
  EXPECT_EQ(field_of(j), "hypersurfaces[1].name");
}

TEST(Scenario, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_scenario_text("{\n  \"ambient\": {\"kind\": \"proj\",\n \"dim\": 2,}\n}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field().rfind("line 3", 0), 0u) << e.field();
  }
}

TEST(Scenario, ExpectedValuesAreChecked) {
  auto j = base();
  j["expected"] = {{"X.milnor", "2*h^3"}, {"X.chi", 3}, {"nothing", "0"}};
  j["intersection"]["chi"] = 3;
  const ScenarioReport rep = run_scenario(parse_scenario(j), {FormulaSelection::all(), false});
  int failures = 0;
  for (const auto& v : rep.verdicts)
    if (!v.pass) ++failures;
  EXPECT_EQ(failures, 2);  // wrong class, key never computed
}

TEST(Scenario, TasksSelectWork) {
  auto j = base();
  j["tasks"] = {{{"compute", "le_cycles"}}, {{"report", "summary"}}};
  const ScenarioReport rep = run_scenario(parse_scenario(j), {FormulaSelection::all(), false});
  EXPECT_EQ(rep.find_class("X.milnor"), nullptr);
  ASSERT_NE(rep.find_class("P.le[1]"), nullptr);
  EXPECT_EQ(rep.find_class("P.le[1]")->str(), "h^2");
  EXPECT_NE(rep.find_value("summary"), nullptr);
}

TEST(Scenario, DeterministicMachineRendering) {
  const Scenario sc = parse_scenario(base());
  const auto a = report_json(sc, run_scenario(sc, {FormulaSelection::all(), false}), false).dump();
  const auto b = report_json(sc, run_scenario(sc, {FormulaSelection::all(), false}), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);
}

TEST(Scenario, MachineRenderingReparses) {
  for (const auto& name : list_fixtures()) {
    const Scenario sc = load_fixture(name).scenario();
    const ScenarioReport rep = run_scenario(sc, {FormulaSelection::all(), false});
    const auto j = report_json(sc, rep, false);
    for (const auto& [key, c] : rep.classes)
      EXPECT_EQ(parse_class(c.ambient(), j["classes"][key].get<std::string>()), c) << name << " " << key;
  }
}

TEST(Scenario, GeneralCaseAndProjBundleAmbient) {
  const auto j = nlohmann::json::parse(R"json({
    "ambient": {"kind": "projbundle", "base": {"kind": "proj", "dim": 1},
                "bundle": {"rank": 2, "chern": "1 + 3*h"}},
    "expected": {}
  })json");
  const Scenario sc = parse_scenario(j);
  EXPECT_EQ(sc.ambient->dimension(), 2);
  EXPECT_EQ(sc.ambient->kind(), AmbientSpace::Kind::ProjBundle);
}

TEST(Scenario, FormulaRestriction) {
  const Scenario sc = parse_scenario(base());
  const ScenarioReport rep = run_scenario(sc, {FormulaSelection::parse("cor12"), false});
  EXPECT_NE(rep.find_class("X.milnor[cor12]"), nullptr);
  EXPECT_EQ(rep.find_class("X.milnor[thm41]"), nullptr);
}
