#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "milnor/chow.hpp"

namespace milnor {

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Output of one scenario run: computed classes in insertion order, oracle
/// values, and verdicts.
struct ScenarioReport {
  std::string title;
  std::vector<std::pair<std::string, CycleClass>> classes;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Verdict> verdicts;
  /// Set when formulas were cross-checked.
  std::optional<bool> formulas_agree;
  std::optional<double> elapsed_ms;

  void add_class(std::string key, CycleClass c) { classes.emplace_back(std::move(key), std::move(c)); }
  void add_value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
  void add_verdict(std::string name, bool pass, std::string detail = {}) {
    verdicts.push_back({std::move(name), pass, std::move(detail)});
  }
  const CycleClass* find_class(const std::string& key) const;
  const std::string* find_value(const std::string& key) const;
  bool all_pass() const;

  void merge(const ScenarioReport& other);

  std::string render_text(bool with_timing = true) const;
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

}  // namespace milnor
