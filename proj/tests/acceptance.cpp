// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>

#include "milnor/fixtures.hpp"
#include "milnor/verify.hpp"

using namespace milnor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Run {
  Scenario sc;
  ScenarioReport rep;
  double ms = 0;
};

Run run_named(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  Scenario sc = load_fixture(name).scenario();
  ScenarioReport rep = run_scenario(sc, {FormulaSelection::all(), false});
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(sc), std::move(rep), ms};
}

bool has(const Run& r, const std::string& key, const std::string& text) {
  const CycleClass* c = r.rep.find_class(key);
  return c && *c == parse_class(c->ambient(), text);
}

bool value(const Run& r, const std::string& key, const std::string& v) {
  const std::string* got = r.rep.find_value(key);
  return got && *got == v;
}

void common(Outcome& o, const Run& r) {
  o.require(r.rep.all_pass(), r.sc.name + " has failing checks");
  o.require(r.ms < 1000.0, r.sc.name + " took " + std::to_string(r.ms) + " ms");
}

const PropertyResult* find_property(const std::vector<SuiteResult>& s, const std::string& name) {
  for (const auto& suite : s)
    for (const auto& p : suite.properties)
      if (p.name == name) return &p;
  return nullptr;
}

void require_property(Outcome& o, const std::vector<SuiteResult>& s, const std::string& name, int min_cases) {
  const PropertyResult* p = find_property(s, name);
  if (!p) {
    o.require(false, name + " missing");
    return;
  }
  o.require(p->pass(), name + ": " + p->first_failure);
  o.require(p->cases >= min_cases, name + " ran " + std::to_string(p->cases) + " cases");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("nodal cubic in P^2", [] {
    Outcome o;
    const Run r = run_named("nodal_cubic_p2");
    common(o, r);
    o.require(has(r, "C.milnor", "h^2"), "M != h^2");
    o.require(degree(*r.rep.find_class("C.milnor")) == 1, "degree of M != 1");
    o.require(value(r, "C.chi", "1"), "chi != 1");
    o.require(degree(*r.rep.find_class("C.virt")) == 0, "degree of c^Vir != 0");
    o.require(has(r, "C.milnor[pp]", "h^2") && has(r, "C.milnor[aluffi]", "h^2"), "PP and Aluffi routes");
    return o;
  });

  criteria.emplace_back("cuspidal cubic in P^2", [] {
    Outcome o;
    const Run r = run_named("cuspidal_cubic_p2");
    common(o, r);
    o.require(has(r, "C.milnor", "2*h^2"), "M != 2h^2");
    o.require(value(r, "C.chi", "2"), "chi != 2");
    return o;
  });

  criteria.emplace_back("quadric cone in P^3", [] {
    Outcome o;
    const Run r = run_named("quadric_cone_p3");
    common(o, r);
    o.require(has(r, "Q.milnor", "h^3"), "M != h^3");
    o.require(value(r, "Q.chi", "3"), "chi != 3");
    o.require(degree(*r.rep.find_class("Q.virt")) == 4, "degree of c^Vir != 4");
    return o;
  });

  criteria.emplace_back("two planes in P^3", [] {
    Outcome o;
    const Run r = run_named("two_planes_p3");
    common(o, r);
    o.require(has(r, "P.milnor[pp]", "-h^2"), "stratified route != -h^2");
    o.require(has(r, "P.milnor[definition]", "-h^2"), "definition != -h^2");
    o.require(has(r, "P.virt", "2*h + 4*h^2 + 4*h^3"), "c^Vir");
    o.require(has(r, "P.csm", "2*h + 5*h^2 + 4*h^3"), "c^SM");
    return o;
  });

  criteria.emplace_back("two planes cap generic plane", [] {
    Outcome o;
    const Run r = run_named("two_planes_cap_plane_p3");
    common(o, r);
    for (const char* f : {"thm41", "cor11", "cor12", "pp_ais", "pp_full"})
      o.require(has(r, std::string("X.milnor[") + f + "]", "h^3"), std::string(f) + " != h^3");
    // The nodal conic directly, in codimension 2 of P^3.
    const AmbientPtr p3 = r.sc.ambient;
    const CycleClass direct =
        milnor_from_definition(parse_class(p3, "2*h^2 + 2*h^3"), parse_class(p3, "2*h^2 + 3*h^3"), 3, 2);
    o.require(direct == parse_class(p3, "h^3"), "direct Milnor class of the nodal conic");
    o.require(has(r, "X.csm", "2*h^2 + 3*h^3") && has(r, "X.virt", "2*h^2 + 2*h^3"), "X classes");
    return o;
  });

  criteria.emplace_back("quadric cone cap vertex-avoiding plane", [] {
    Outcome o;
    const Run r = run_named("quadric_cone_cap_plane_p3");
    common(o, r);
    for (const char* f : {"thm41", "cor11", "cor12", "pp_ais", "pp_full", "leformula", "aluffi"})
      o.require(has(r, std::string("X.milnor[") + f + "]", "0"), std::string(f) + " != 0");
    return o;
  });

  std::vector<SuiteResult> intersect;
  criteria.emplace_back("four-formula agreement on random scenarios", [&] {
    Outcome o;
    intersect = run_suite("intersect", 7);
    require_property(o, intersect, "intersect/all intersection formulas agree", 200);
    o.require(intersect.front().pass(), "intersect suite has failures");
    o.require(intersect.front().elapsed_ms < 10000.0, "suite took " + std::to_string(intersect.front().elapsed_ms) + " ms");
    return o;
  });

  criteria.emplace_back("Le round trip and Le formula", [] {
    Outcome o;
    const auto s = run_suite("lecycles", 11);
    require_property(o, s, "lecycles/milnor_to_le after le_to_milnor", 100);
    require_property(o, s, "lecycles/le_to_milnor after milnor_to_le", 100);
    for (const auto& name : list_fixtures()) {
      const Scenario sc = load_fixture(name).scenario();
      if (!sc.intersection) continue;
      std::vector<HypersurfaceData> hyps;
      for (const auto& n : sc.intersection->of) hyps.push_back(sc.hypersurface(n));
      const IntersectionScenario isc(std::move(hyps));
      o.require(milnor_le_formula(isc) == milnor_cor11(isc), name + ": leformula != cor11");
    }
    return o;
  });

  criteria.emplace_back("projective-bundle identities", [] {
    Outcome o;
    const auto s = run_suite("projbundle", 5);
    require_property(o, s, "projbundle/Grothendieck relation holds", 100);
    require_property(o, s, "projbundle/projection formula", 100);
    require_property(o, s, "projbundle/tangent identities", 100);
    require_property(o, s, "projbundle/Lemma 2 transfer on a grid of twists", 36);
    require_property(o, s, "projbundle/rank one returns its input", 100);
    require_property(o, s, "projbundle/normal form is independent of association order", 100);
    const Run g = run_named("general_split_p2");
    common(o, g);
    return o;
  });

  criteria.emplace_back("ring and bundle axiom suites", [] {
    Outcome o;
    const auto ring = run_suite("ring", 42);
    const auto bundle = run_suite("bundle", 42);
    for (const auto* s : {&ring, &bundle})
      for (const auto& p : s->front().properties) require_property(o, *s, p.name, 100);
    o.require(ring.front().properties.size() >= 5, "fewer than 5 ring properties");
    require_property(o, bundle, "bundle/twist agrees with the formal-root oracle", 100);
    require_property(o, bundle, "bundle/Whitney sum formula", 100);
    require_property(o, bundle, "bundle/dual is an involution", 100);
    return o;
  });

  criteria.emplace_back("negative controls are detected", [] {
    Outcome o;
    const ScenarioReport bad = run_fixture(corrupted_gamma_fixture(), {FormulaSelection::all(), false});
    bool saw_fail = false;
    for (const auto& v : bad.verdicts) saw_fail = saw_fail || !v.pass;
    o.require(saw_fail, "corrupted gamma produced no FAIL verdict");
    o.require(!sign_flipped_relation_check().pass, "sign-flipped relation produced no FAIL");
    return o;
  });

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name;
    if (!o.pass) std::cout << "  (" << o.detail << ")";
    std::cout << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
