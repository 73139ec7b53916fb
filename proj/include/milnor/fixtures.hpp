#pragma once

// Builtin scenarios with frozen expected values. Each carries the hand
// derivation of its expected values.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "milnor/scenario.hpp"

namespace milnor {

struct Fixture {
  std::string name;
  nlohmann::json content;
  std::vector<std::pair<std::string, std::string>> expected;
  std::string derivation;

  Scenario scenario() const { return parse_scenario(content); }
};

/// Names of the shipped fixtures, sorted.
std::vector<std::string> list_fixtures();

/// Throws Error listing the available names when `name` is unknown.
Fixture load_fixture(const std::string& name);

/// A degree-d plane curve with k ordinary nodes: M = k h^2 and
/// chi = 3d - d^2 + k.
Fixture k_nodal_curve(int d, int k);

/// The nodal cubic with the node's Milnor fibre Euler characteristic
/// corrupted. Every run of it must report a FAIL.
Fixture corrupted_gamma_fixture();

/// Tangent identities over a projective bundle whose relation has the sign
/// of its top coefficient flipped. Must come back failing.
Verdict sign_flipped_relation_check();

ScenarioReport run_fixture(const Fixture& f, const RunOptions& opts = {});

namespace detail {
/// {stem, json text} for every fixtures/*.json, generated at build time.
const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();
}  // namespace detail

}  // namespace milnor
