#include "milnor/fixtures.hpp"

#include <algorithm>

namespace milnor {

namespace {

Fixture from_json(std::string name, nlohmann::json j) {
  Fixture f;
  f.name = std::move(name);
  f.derivation = j.value("derivation", "");
  if (j.contains("expected"))
    for (auto it = j["expected"].begin(); it != j["expected"].end(); ++it)
      f.expected.emplace_back(it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  f.content = std::move(j);
  return f;
}

}  // namespace

std::vector<std::string> list_fixtures() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::embedded_fixtures()) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

Fixture load_fixture(const std::string& name) {
  for (const auto& [stem, text] : detail::embedded_fixtures())
    if (stem == name) return from_json(stem, nlohmann::json::parse(text));
  std::string avail;
  for (const auto& n : list_fixtures()) avail += (avail.empty() ? "" : ", ") + n;
  throw Error("unknown example '" + name + "'; available: " + avail);
}

Fixture k_nodal_curve(int d, int k) {
  if (d < 1 || k < 0) throw Error("k_nodal_curve: need d >= 1 and k >= 0");
  using nlohmann::json;
  const long chi = 3L * d - static_cast<long>(d) * d + k;
  const AmbientPtr p2 = AmbientSpace::proj_space(2);
  const CycleClass h = CycleClass::generator(p2, 0);
  // Open stratum csm: c1 part d h, degree chi.
  const CycleClass csm = Integer(d) * h + Integer(chi) * (h * h);
  json strata = json::array();
  strata.push_back({{"name", "regular"}, {"open", true}, {"csm", csm.str()}});
  for (int i = 1; i <= k; ++i)
    strata.push_back({{"name", "node" + std::to_string(i)}, {"closure", "point"}, {"milnor_fiber_chi", 0}});
  json hyp = {{"name", "C"}, {"degree", d}, {"strata", strata}, {"segre", "points(" + std::to_string(k) + ")"}};
  json j = {
      {"name", "k_nodal_curve(" + std::to_string(d) + "," + std::to_string(k) + ")"},
      {"derivation",
       "A smooth plane curve of degree d has c^SM = c(TP^2)/(1+dh) dh = dh + (3d - d^2)h^2, so chi = 3d - d^2. "
       "Each ordinary node has a cylinder as Milnor fibre (chi 0), so mu = 1 and gamma = 1 at the node; the "
       "local Milnor numbers add up to k and chi rises by one per node."},
      {"ambient", {{"kind", "proj"}, {"dim", 2}}},
      {"hypersurfaces", json::array({hyp})},
      {"expected",
       {{"C.milnor", (Integer(k) * (h * h)).str()},
        {"C.chi", std::to_string(chi)}}}};
  return from_json("k_nodal_curve_" + std::to_string(d) + "_" + std::to_string(k), j);
}

Fixture corrupted_gamma_fixture() {
  Fixture f = load_fixture("nodal_cubic_p2");
  // A node with Milnor fibre chi -1 would carry mu = 2.
  f.content["hypersurfaces"][0]["strata"][1]["milnor_fiber_chi"] = -1;
  f.content["name"] = "nodal_cubic_p2 (corrupted gamma)";
  f.name = "nodal_cubic_p2_corrupted";
  return f;
}

Verdict sign_flipped_relation_check() {
  const AmbientPtr base = AmbientSpace::proj_space(2);
  const BundleClass e = direct_sum(line_bundle(base, {1}), line_bundle(base, {2}));
  const AmbientPtr good = AmbientSpace::proj_bundle(base, e.rank(), e.chern());
  std::vector<Coeffs> rel = good->relation();
  for (auto& [m, c] : rel.front()) c = -c;
  const AmbientPtr bad = AmbientSpace::proj_bundle_with_relation(base, e.rank(), e.chern(), rel);
  Verdict v = verify_tangent_identities(ProjBundleRing(e, bad), std::vector<std::vector<int>>{{1}, {2}});
  const CycleClass defect = grothendieck_defect(ProjBundleRing(e, bad));
  if (!defect.is_zero()) {
    v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("Grothendieck defect ") + defect.str();
  }
  v.name = "sign-flipped relation";
  return v;
}

ScenarioReport run_fixture(const Fixture& f, const RunOptions& opts) {
  Scenario sc = f.scenario();
  ScenarioReport rep = run_scenario(sc, opts);
  return rep;
}

}  // namespace milnor
