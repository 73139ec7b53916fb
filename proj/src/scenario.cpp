#include "milnor/scenario.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace milnor {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(field, std::string("missing required field '") + key + "'");
  return *it;
}

void allow_only(const json& j, std::initializer_list<const char*> keys, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InputError(field + "." + it.key(), "unknown field");
  }
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw InputError(field, "expected a string");
  return j.get<std::string>();
}

CycleClass as_class(const AmbientPtr& amb, const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return CycleClass::constant(amb, Integer(j.get<long>()));
    return parse_class(amb, as_string(j, field));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
}

std::vector<int> as_degrees(const json& j, const AmbientPtr& amb, const std::string& field) {
  std::vector<int> out;
  if (j.is_number_integer()) {
    out.push_back(j.get<int>());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  } else {
    throw InputError(field, "expected an integer or an array of integers");
  }
  if (static_cast<int>(out.size()) != amb->num_generators())
    throw InputError(field, "expected " + std::to_string(amb->num_generators()) + " degrees");
  return out;
}

struct ParsedBundle {
  BundleClass e;
  std::optional<std::vector<std::vector<int>>> splitting;
};

ParsedBundle parse_bundle(const json& j, const AmbientPtr& base, const std::string& field) {
  allow_only(j, {"split", "rank", "chern"}, field);
  try {
    if (j.contains("split")) {
      const json& s = j["split"];
      if (!s.is_array() || s.empty()) throw InputError(field + ".split", "expected a nonempty array of multidegrees");
      std::vector<std::vector<int>> degs;
      for (std::size_t i = 0; i < s.size(); ++i)
        degs.push_back(as_degrees(s[i], base, field + ".split[" + std::to_string(i) + "]"));
      return {split_bundle(base, degs), degs};
    }
    const int rank = as_int(require(j, "rank", field), field + ".rank");
    CycleClass chern = as_class(base, require(j, "chern", field), field + ".chern");
    return {BundleClass(rank, chern), std::nullopt};
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
}

Stratum parse_stratum(const json& j, const AmbientPtr& amb, const std::string& field) {
  allow_only(j, {"name", "open", "dim", "closure", "milnor_fiber_chi", "contained_in", "csm"}, field);
  Stratum s;
  s.name = as_string(require(j, "name", field), field + ".name");
  s.open = j.value("open", false);
  if (s.open) {
    s.closure_class = CycleClass::zero(amb);
    if (j.contains("closure")) throw InputError(field + ".closure", "the open stratum's closure is the hypersurface");
    if (j.contains("csm")) s.csm_closure = as_class(amb, j["csm"], field + ".csm");
    s.milnor_fiber_chi = j.contains("milnor_fiber_chi") ? as_int(j["milnor_fiber_chi"], field + ".milnor_fiber_chi") : 1;
  } else {
    s.milnor_fiber_chi = as_int(require(j, "milnor_fiber_chi", field), field + ".milnor_fiber_chi");
    const json& c = require(j, "closure", field);
    const std::string cf = field + ".closure";
    const bool has_dim = j.contains("dim");
    const int dim = has_dim ? as_int(j["dim"], field + ".dim") : -1;
    try {
      if (c.is_string()) {
        const std::string text = c.get<std::string>();
        if (text == "point") {
          Stratum p = point_stratum(amb, s.name, s.milnor_fiber_chi);
          s.closure_class = p.closure_class;
          s.csm_closure = p.csm_closure;
          s.dim = 0;
        } else if (text.rfind("linear(", 0) == 0 && text.back() == ')') {
          const int m = std::stoi(text.substr(7, text.size() - 8));
          Stratum l = linear_stratum(amb, s.name, m, s.milnor_fiber_chi);
          s.closure_class = l.closure_class;
          s.csm_closure = l.csm_closure;
          s.dim = m;
        } else {
          throw InputError(cf, "expected \"point\", \"linear(m)\" or {\"class\": ..., \"csm\": ...}");
        }
        if (has_dim && dim != s.dim) throw InputError(field + ".dim", "does not match the closure shorthand");
      } else {
        allow_only(c, {"class", "csm"}, cf);
        s.closure_class = as_class(amb, require(c, "class", cf), cf + ".class");
        s.csm_closure = as_class(amb, require(c, "csm", cf), cf + ".csm");
        if (!has_dim) throw InputError(field, "explicit closures need 'dim'");
        s.dim = dim;
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(cf, e.what());
    }
    if (j.contains("csm")) throw InputError(field + ".csm", "only the open stratum takes 'csm'; use closure.csm");
  }
  if (j.contains("contained_in")) {
    const json& ci = j["contained_in"];
    if (!ci.is_array()) throw InputError(field + ".contained_in", "expected an array of stratum names");
    for (std::size_t i = 0; i < ci.size(); ++i)
      s.contained_in.insert(as_string(ci[i], field + ".contained_in[" + std::to_string(i) + "]"));
  }
  return s;
}

HypersurfaceData parse_hypersurface(const json& j, const AmbientPtr& amb, const std::string& field) {
  allow_only(j, {"name", "degree", "c1", "strata", "le_cycles", "segre"}, field);
  const std::string name = as_string(require(j, "name", field), field + ".name");
  if (amb->kind() == AmbientSpace::Kind::ProjBundle)
    throw InputError(field, "hypersurfaces are supported in proj and multiproj ambients only");
  std::optional<BundleClass> line;
  try {
    if (j.contains("degree")) line = line_bundle(amb, as_degrees(j["degree"], amb, field + ".degree"));
    else if (j.contains("c1")) line = line_bundle_from_c1(as_class(amb, j["c1"], field + ".c1"));
    else throw InputError(field, "missing 'degree' (or 'c1')");
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(field + ".degree", e.what());
  }

  std::optional<LeCycles> le;
  if (j.contains("le_cycles")) {
    const json& lj = j["le_cycles"];
    const std::string lf = field + ".le_cycles";
    if (!lj.is_object()) throw InputError(lf, "expected an object mapping dimension to class");
    le = LeCycles{amb, {}};
    for (auto it = lj.begin(); it != lj.end(); ++it) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
      } catch (const std::exception&) {
        throw InputError(lf + "." + it.key(), "keys must be dimensions");
      }
      CycleClass c = as_class(amb, it.value(), lf + "." + it.key());
      if (!c.is_zero()) le->classes.emplace(k, c);
    }
    try {
      le->validate();
    } catch (const Error& e) {
      throw InputError(lf, e.what());
    }
  }

  HypersurfaceData out = [&]() {
    if (j.contains("strata")) {
      const json& sj = j["strata"];
      const std::string sf = field + ".strata";
      if (!sj.is_array()) throw InputError(sf, "expected an array");
      std::vector<Stratum> strata;
      for (std::size_t i = 0; i < sj.size(); ++i) strata.push_back(parse_stratum(sj[i], amb, sf + "[" + std::to_string(i) + "]"));
      std::set<std::string> names;
      for (const auto& s : strata) names.insert(s.name);
      for (std::size_t i = 0; i < strata.size(); ++i)
        for (const auto& c : strata[i].contained_in)
          if (!names.count(c))
            throw InputError(sf + "[" + std::to_string(i) + "].contained_in", "unknown stratum name '" + c + "'");
      try {
        HypersurfaceData h = HypersurfaceData::from_strata(name, StratifiedHypersurface(*line, std::move(strata)));
        h.le = le;
        return h;
      } catch (const InputError&) {
        throw;
      } catch (const Error& e) {
        throw InputError(sf, e.what());
      }
    }
    if (le) return HypersurfaceData::from_le(name, *line, *le);
    // Smooth hypersurface: a single open stratum.
    Stratum open;
    open.name = "regular";
    open.open = true;
    open.closure_class = CycleClass::zero(amb);
    return HypersurfaceData::from_strata(name, StratifiedHypersurface(*line, {open}));
  }();

  if (j.contains("segre")) {
    const std::string text = as_string(j["segre"], field + ".segre");
    try {
      out.segre = segre_builtin(amb, parse_segre_center(text));
    } catch (const Error& e) {
      throw InputError(field + ".segre", e.what());
    }
  }
  return out;
}

}  // namespace

AmbientPtr parse_ambient(const json& j, const std::string& field) {
  const std::string kind = as_string(require(j, "kind", field), field + ".kind");
  try {
    if (kind == "proj") {
      allow_only(j, {"kind", "dim"}, field);
      return AmbientSpace::proj_space(as_int(require(j, "dim", field), field + ".dim"));
    }
    if (kind == "multiproj") {
      allow_only(j, {"kind", "dims"}, field);
      const json& d = require(j, "dims", field);
      if (!d.is_array()) throw InputError(field + ".dims", "expected an array");
      std::vector<int> dims;
      for (std::size_t i = 0; i < d.size(); ++i) dims.push_back(as_int(d[i], field + ".dims[" + std::to_string(i) + "]"));
      return AmbientSpace::multi_proj(dims);
    }
    if (kind == "projbundle") {
      allow_only(j, {"kind", "base", "bundle"}, field);
      AmbientPtr base = parse_ambient(require(j, "base", field), field + ".base");
      ParsedBundle b = parse_bundle(require(j, "bundle", field), base, field + ".bundle");
      return AmbientSpace::proj_bundle(base, b.e.rank(), b.e.chern());
    }
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
  throw InputError(field + ".kind", "unknown ambient kind '" + kind + "' (expected proj, multiproj or projbundle)");
}

const HypersurfaceData& Scenario::hypersurface(const std::string& n) const {
  for (const auto& h : hypersurfaces)
    if (h.name == n) return h;
  throw Error("unknown hypersurface '" + n + "'");
}

Scenario parse_scenario(const json& j) {
  allow_only(j, {"name", "description", "derivation", "ambient", "hypersurfaces", "intersection", "general_case", "tasks",
                 "expected"},
             "");
  Scenario sc;
  sc.name = j.contains("name") ? as_string(j["name"], "name") : "scenario";
  if (j.contains("description")) sc.description = as_string(j["description"], "description");
  if (j.contains("derivation")) sc.derivation = as_string(j["derivation"], "derivation");
  sc.ambient = parse_ambient(require(j, "ambient", ""));

  if (j.contains("hypersurfaces")) {
    const json& hj = j["hypersurfaces"];
    if (!hj.is_array()) throw InputError("hypersurfaces", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < hj.size(); ++i) {
      const std::string f = "hypersurfaces[" + std::to_string(i) + "]";
      sc.hypersurfaces.push_back(parse_hypersurface(hj[i], sc.ambient, f));
      if (!names.insert(sc.hypersurfaces.back().name).second)
        throw InputError(f + ".name", "duplicate hypersurface name '" + sc.hypersurfaces.back().name + "'");
    }
  }

  if (j.contains("intersection")) {
    const json& ij = j["intersection"];
    allow_only(ij, {"of", "chi", "support_min_codim"}, "intersection");
    IntersectionBlock b;
    const json& of = require(ij, "of", "intersection");
    if (!of.is_array() || of.size() < 2) throw InputError("intersection.of", "expected at least two hypersurface names");
    for (std::size_t i = 0; i < of.size(); ++i) {
      const std::string f = "intersection.of[" + std::to_string(i) + "]";
      std::string n = as_string(of[i], f);
      bool found = false;
      for (const auto& h : sc.hypersurfaces) found = found || h.name == n;
      if (!found) throw InputError(f, "unknown hypersurface name '" + n + "'");
      b.of.push_back(n);
    }
    if (ij.contains("chi")) b.chi = Integer(as_int(ij["chi"], "intersection.chi"));
    if (ij.contains("support_min_codim")) b.support_min_codim = as_int(ij["support_min_codim"], "intersection.support_min_codim");
    sc.intersection = b;
  }

  if (j.contains("general_case")) {
    const json& gj = j["general_case"];
    allow_only(gj, {"bundle", "milnor_of_tilde"}, "general_case");
    if (sc.ambient->kind() == AmbientSpace::Kind::ProjBundle)
      throw InputError("general_case", "the base must be a proj or multiproj ambient");
    ParsedBundle b = parse_bundle(require(gj, "bundle", "general_case"), sc.ambient, "general_case.bundle");
    if (b.e.rank() < 1) throw InputError("general_case.bundle", "rank must be at least 1");
    ProjBundleRing ring(b.e);
    CycleClass m = gj.contains("milnor_of_tilde")
                       ? as_class(ring.total(), gj["milnor_of_tilde"], "general_case.milnor_of_tilde")
                       : CycleClass::zero(ring.total());
    sc.general_case = GeneralCaseBlock{b.e, b.splitting, m};
  }

  if (j.contains("tasks")) {
    const json& tj = j["tasks"];
    if (!tj.is_array()) throw InputError("tasks", "expected an array");
    for (std::size_t i = 0; i < tj.size(); ++i) {
      const std::string f = "tasks[" + std::to_string(i) + "]";
      const json& t = tj[i];
      if (!t.is_object() || t.size() != 1) throw InputError(f, "expected one of {compute|verify|report: target}");
      const std::string key = t.begin().key();
      const std::string target = as_string(t.begin().value(), f + "." + key);
      ScenarioTask task;
      if (key == "compute") {
        task.kind = ScenarioTask::Kind::Compute;
        if (target != "classes" && target != "intersection" && target != "general_case" && target != "le_cycles")
          throw InputError(f + ".compute", "unknown target '" + target + "'");
      } else if (key == "verify") {
        task.kind = ScenarioTask::Kind::Verify;
        if (target != "formulas" && target != "expected" && target != "projbundle")
          throw InputError(f + ".verify", "unknown target '" + target + "'");
      } else if (key == "report") {
        task.kind = ScenarioTask::Kind::Report;
        if (target != "summary") throw InputError(f + ".report", "unknown target '" + target + "'");
      } else {
        throw InputError(f + "." + key, "unknown task kind");
      }
      task.target = target;
      if (task.kind == ScenarioTask::Kind::Compute && target == "intersection" && !sc.intersection)
        throw InputError(f, "no intersection block");
      if (task.kind == ScenarioTask::Kind::Compute && target == "general_case" && !sc.general_case)
        throw InputError(f, "no general_case block");
      if (task.kind == ScenarioTask::Kind::Verify && target == "projbundle" && !sc.general_case)
        throw InputError(f, "no general_case block");
      sc.tasks.push_back(task);
    }
  }

  if (j.contains("expected")) {
    const json& ej = j["expected"];
    if (!ej.is_object()) throw InputError("expected", "expected an object");
    for (auto it = ej.begin(); it != ej.end(); ++it) {
      if (it.value().is_string()) sc.expected.emplace_back(it.key(), it.value().get<std::string>());
      else if (it.value().is_number_integer()) sc.expected.emplace_back(it.key(), std::to_string(it.value().get<long>()));
      else throw InputError("expected." + it.key(), "expected a class string or an integer");
    }
  }
  return sc;
}

Scenario parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col), e.what());
  }
  return parse_scenario(j);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

namespace {

struct Plan {
  bool classes = false, intersection = false, general = false, le = false;
  bool expected = false, projbundle = false, summary = false;
};

Plan make_plan(const Scenario& sc) {
  Plan p;
  if (sc.tasks.empty()) {
    p.classes = !sc.hypersurfaces.empty();
    p.intersection = sc.intersection.has_value();
    p.general = p.projbundle = sc.general_case.has_value();
    p.expected = !sc.expected.empty();
    return p;
  }
  for (const auto& t : sc.tasks) {
    if (t.kind == ScenarioTask::Kind::Compute) {
      if (t.target == "classes") p.classes = true;
      if (t.target == "intersection") p.intersection = true;
      if (t.target == "general_case") p.general = true;
      if (t.target == "le_cycles") p.le = true;
    } else if (t.kind == ScenarioTask::Kind::Verify) {
      if (t.target == "formulas") p.classes = p.intersection = true;
      if (t.target == "expected") p.expected = true;
      if (t.target == "projbundle") p.projbundle = true;
    } else {
      p.summary = true;
    }
  }
  if (!sc.hypersurfaces.empty() && p.classes == false && p.intersection == false) p.classes = p.le;
  return p;
}

bool selects_everything(const FormulaSelection& f) { return f.thm41 && f.cor11 && f.cor12 && f.pp && f.aluffi && f.le; }

void verify_expected(const Scenario& sc, ScenarioReport& rep, const FormulaSelection& formulas) {
  for (const auto& [key, want] : sc.expected) {
    // Per-formula results are only expected when every formula runs.
    const bool per_formula = key.find('[') != std::string::npos;
    if (per_formula && !selects_everything(formulas) && !rep.find_class(key) && !rep.find_value(key)) continue;
    if (const CycleClass* got = rep.find_class(key)) {
      try {
        const CycleClass w = parse_class(got->ambient(), want);
        rep.add_verdict("expected " + key, w == *got, "want " + w.str() + ", got " + got->str());
      } catch (const Error& e) {
        rep.add_verdict("expected " + key, false, e.what());
      }
    } else if (const std::string* v = rep.find_value(key)) {
      rep.add_verdict("expected " + key, *v == want, "want " + want + ", got " + *v);
    } else {
      rep.add_verdict("expected " + key, false, "not computed");
    }
  }
}

}  // namespace

ScenarioReport run_scenario(const Scenario& sc, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(sc);
  ScenarioReport rep;
  rep.title = sc.name;

  if (plan.classes)
    for (const auto& h : sc.hypersurfaces) rep.merge(validate_hypersurface(h, opts.formulas));

  if (plan.le) {
    for (const auto& h : sc.hypersurfaces) {
      const LeCycles le = h.le ? *h.le : milnor_to_le(split_by_dimension(h.classes.milnor), h.line);
      if (le.classes.empty()) rep.add_class(h.name + ".le", CycleClass::zero(sc.ambient));
      for (const auto& [k, c] : le.classes) rep.add_class(h.name + ".le[" + std::to_string(k) + "]", c);
    }
  }

  if (plan.intersection && sc.intersection) {
    std::vector<HypersurfaceData> members;
    for (const auto& n : sc.intersection->of) members.push_back(sc.hypersurface(n));
    IntersectionScenario isc(std::move(members));
    CrossValidateOptions cv;
    cv.formulas = opts.formulas;
    cv.expected_chi = sc.intersection->chi;
    cv.support_min_codim = sc.intersection->support_min_codim;
    cv.include_hypersurfaces = false;
    ScenarioReport part = cross_validate(isc, cv);
    for (const auto& [k, c] : part.classes) {
      if (k.rfind("X.milnor[", 0) == 0) {
        rep.add_class("X.milnor", c);
        break;
      }
    }
    rep.merge(part);
  }

  if ((plan.general || plan.projbundle) && sc.general_case) {
    const GeneralCaseBlock& g = *sc.general_case;
    ProjBundleRing ring(g.e);
    if (plan.general) {
      rep.add_class("general.milnor_of_tilde", g.milnor_of_tilde);
      rep.add_class("general.c(F)", taut_sub_chern(ring).chern());
      rep.add_class("general.milnor", milnor_general(ring, g.milnor_of_tilde));
    }
    if (plan.projbundle) {
      const Verdict t = verify_tangent_identities(ring, g.splitting);
      rep.add_verdict("general: " + t.name, t.pass, t.detail);
      const CycleClass defect = grothendieck_defect(ring);
      rep.add_verdict("general: Grothendieck relation", defect.is_zero(), "defect " + defect.str());
      std::vector<CycleClass> alphas;
      for (const auto& m : basis_monomials(ring.base())) alphas.push_back(CycleClass::monomial(ring.base(), m));
      const Verdict l1 = lemma1_pullback_check(ring, alphas);
      rep.add_verdict("general: " + l1.name, l1.pass, l1.detail);
      bool proj_ok = true;
      const auto total_basis = basis_monomials(ring.total());
      for (const auto& a : alphas)
        for (const auto& b : total_basis)
          proj_ok = proj_ok && projection_formula_holds(ring, a, CycleClass::monomial(ring.total(), b));
      rep.add_verdict("general: projection formula", proj_ok);
    }
  }

  if (plan.expected) verify_expected(sc, rep, opts.formulas);
  if (plan.summary) {
    std::size_t failed = 0;
    for (const auto& v : rep.verdicts) failed += v.pass ? 0 : 1;
    rep.add_value("summary", std::to_string(rep.verdicts.size()) + " checks, " + std::to_string(failed) + " failed");
  }
  if (opts.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::ordered_json report_json(const Scenario& sc, const ScenarioReport& rep, bool with_timing) {
  nlohmann::ordered_json j;
  j["scenario"] = sc.name;
  j["ambient"] = sc.ambient->describe();
  const nlohmann::ordered_json body = rep.to_json(with_timing);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
  return j;
}

}  // namespace milnor
