#include "milnor/report.hpp"

#include <iomanip>
#include <sstream>

namespace milnor {

const CycleClass* ScenarioReport::find_class(const std::string& key) const {
  for (const auto& [k, c] : classes)
    if (k == key) return &c;
  return nullptr;
}

const std::string* ScenarioReport::find_value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

bool ScenarioReport::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return formulas_agree.value_or(true);
}

void ScenarioReport::merge(const ScenarioReport& other) {
  classes.insert(classes.end(), other.classes.begin(), other.classes.end());
  values.insert(values.end(), other.values.begin(), other.values.end());
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
  if (other.formulas_agree) formulas_agree = formulas_agree.value_or(true) && *other.formulas_agree;
}

std::string ScenarioReport::render_text(bool with_timing) const {
  std::ostringstream os;
  os << "== " << title << " ==\n";
  std::size_t width = 0;
  for (const auto& [k, c] : classes) width = std::max(width, k.size());
  for (const auto& [k, v] : values) width = std::max(width, k.size());
  for (const auto& [k, c] : classes) os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << c.str() << '\n';
  for (const auto& [k, v] : values) os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  for (const auto& v : verdicts) {
    os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  if (formulas_agree) os << "formulas-agree: " << (*formulas_agree ? "yes" : "no") << '\n';
  if (with_timing && elapsed_ms) os << "elapsed-ms: " << std::fixed << std::setprecision(3) << *elapsed_ms << '\n';
  return os.str();
}

nlohmann::ordered_json ScenarioReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["classes"] = nlohmann::ordered_json::object();
  for (const auto& [k, c] : classes) j["classes"][k] = c.str();
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) j["values"][k] = v;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  if (formulas_agree) j["formulas_agree"] = *formulas_agree;
  j["pass"] = all_pass();
  if (with_timing && elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

}  // namespace milnor
