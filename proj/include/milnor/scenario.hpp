#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/intersect.hpp"
#include "milnor/projbundle.hpp"

namespace milnor {

/// Malformed or inconsistent scenario input. `field` is a JSON-pointer-like
/// path to the offending entry.
class InputError : public Error {
 public:
  InputError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ScenarioTask {
  enum class Kind { Compute, Verify, Report };
  Kind kind;
  std::string target;
};

struct IntersectionBlock {
  std::vector<std::string> of;
  std::optional<Integer> chi;
  std::optional<int> support_min_codim;
};

struct GeneralCaseBlock {
  BundleClass e;
  std::optional<std::vector<std::vector<int>>> splitting;
  CycleClass milnor_of_tilde;
};

/// A parsed and validated scenario file.
struct Scenario {
  std::string name;
  std::string description;
  std::string derivation;
  AmbientPtr ambient;
  std::vector<HypersurfaceData> hypersurfaces;
  std::optional<IntersectionBlock> intersection;
  std::optional<GeneralCaseBlock> general_case;
  std::vector<ScenarioTask> tasks;
  /// Result key -> canonical class text or integer.
  std::vector<std::pair<std::string, std::string>> expected;

  const HypersurfaceData& hypersurface(const std::string& name) const;
};

AmbientPtr parse_ambient(const nlohmann::json& j, const std::string& field = "ambient");
Scenario parse_scenario(const nlohmann::json& j);
/// Parses JSON text; syntax errors report line and column.
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

struct RunOptions {
  FormulaSelection formulas;
  bool timing = true;
};

/// Runs every task of the scenario and assembles one report.
ScenarioReport run_scenario(const Scenario& sc, const RunOptions& opts = {});

/// Machine rendering with the scenario name attached.
nlohmann::ordered_json report_json(const Scenario& sc, const ScenarioReport& rep, bool with_timing);

}  // namespace milnor
