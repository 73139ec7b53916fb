#include "milnor/intersect.hpp"

#include <functional>

namespace milnor {

HypersurfaceData HypersurfaceData::from_strata(std::string name, StratifiedHypersurface hyp) {
  ClassBundle3 cls = hypersurface_classes(hyp);
  BundleClass line = hyp.line_bundle();
  return HypersurfaceData{std::move(name), std::move(line), std::move(cls), std::move(hyp), std::nullopt, std::nullopt};
}

HypersurfaceData HypersurfaceData::from_le(std::string name, BundleClass line, LeCycles le) {
  le.validate();
  const AmbientPtr& amb = line.ambient();
  ClassBundle3 cls;
  cls.codim = 1;
  cls.virt = virtual_class(amb, line, line.chern_k(1));
  cls.milnor = total(amb, le_to_milnor(le, line));
  cls.csm = csm_from_milnor(cls.virt, cls.milnor, amb->dimension(), 1);
  return HypersurfaceData{std::move(name), std::move(line), std::move(cls), std::nullopt, std::move(le), std::nullopt};
}

bool TermSelector::all_csm() const {
  for (int e : eps)
    if (e == 0) return false;
  return true;
}

IntersectionScenario::IntersectionScenario(AmbientPtr ambient, std::vector<HypersurfaceData> hyps,
                                           BundleClass tangent)
    : ambient_(std::move(ambient)), hyps_(std::move(hyps)), tangent_(std::move(tangent)), tm_inv_(ambient_) {
  if (hyps_.empty()) throw Error("intersection: no hypersurfaces");
  if (!same_ambient(tangent_.ambient(), ambient_)) throw Error("intersection: tangent class on the wrong ambient");
  for (const auto& h : hyps_) {
    if (!same_ambient(h.line.ambient(), ambient_) || !same_ambient(h.classes.virt.ambient(), ambient_) ||
        !same_ambient(h.classes.csm.ambient(), ambient_) || !same_ambient(h.classes.milnor.ambient(), ambient_))
      throw Error("intersection: '" + h.name + "' lives on a different ambient");
  }
  tm_inv_ = ring_ipow(tangent_.chern(), -(r() - 1));
}

namespace {

const AmbientPtr& first_ambient(const std::vector<HypersurfaceData>& hyps) {
  if (hyps.empty()) throw Error("intersection: no hypersurfaces");
  return hyps.front().line.ambient();
}

}  // namespace

IntersectionScenario::IntersectionScenario(std::vector<HypersurfaceData> hyps)
    : IntersectionScenario(first_ambient(hyps), hyps, tangent_bundle(first_ambient(hyps))) {}

int IntersectionScenario::codim() const {
  int d = 0;
  for (const auto& h : hyps_) d += h.classes.codim;
  return d;
}

namespace {

void require_r2(const IntersectionScenario& sc, const char* what) {
  if (sc.r() < 2) throw Error(std::string(what) + ": needs at least two hypersurfaces, got " + std::to_string(sc.r()));
}

void require_hypersurfaces(const IntersectionScenario& sc, const char* what) {
  for (const auto& h : sc.hyps())
    if (h.classes.codim != 1) throw Error(std::string(what) + ": '" + h.name + "' is not a hypersurface");
}

const CycleClass& open_csm(const HypersurfaceData& h) {
  const Stratum& open = h.strata->open_stratum();
  return open.csm_closure ? *open.csm_closure : h.classes.csm;
}

}  // namespace

std::vector<SignedSelector> thm41_terms(const IntersectionScenario& sc) {
  require_r2(sc, "thm41");
  const int n = sc.n(), r = sc.r();
  std::vector<SignedSelector> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    TermSelector sel;
    long exponent = static_cast<long>(n) * r - n;
    for (int i = 0; i < r; ++i) {
      const int e = (mask >> i) & 1u;
      sel.eps.push_back(e);
      exponent += static_cast<long>(n - sc.hyps()[i].classes.codim) * e;
    }
    if (sel.all_csm()) continue;
    out.push_back({sel, exponent % 2 == 0 ? 1 : -1});
  }
  return out;
}

CycleClass milnor_thm41(const IntersectionScenario& sc) {
  CycleClass sum(sc.ambient());
  for (const auto& [sel, sign] : thm41_terms(sc)) {
    CycleClass prod = CycleClass::one(sc.ambient());
    for (int i = 0; i < sc.r(); ++i) {
      const ClassBundle3& c = sc.hyps()[i].classes;
      prod *= sel.eps[i] ? c.csm : c.milnor;
      if (prod.is_zero()) break;
    }
    sum += Integer(sign) * prod;
  }
  return sc.tangent_power_inverse() * sum;
}

CycleClass a_product(const IntersectionScenario& sc, int i) {
  CycleClass a = CycleClass::one(sc.ambient());
  for (int j = 1; j <= sc.r() - 1; ++j) a *= (j >= i) ? sc.hyps()[j].classes.virt : sc.hyps()[j - 1].classes.csm;
  return a;
}

CycleClass milnor_cor11(const IntersectionScenario& sc) {
  require_r2(sc, "cor11");
  const int d = sc.codim();
  CycleClass sum(sc.ambient());
  for (int i = 1; i <= sc.r(); ++i) {
    const ClassBundle3& c = sc.hyps()[i - 1].classes;
    sum += sign_pow(d + c.codim) * (a_product(sc, i) * c.milnor);
  }
  return sc.tangent_power_inverse() * sum;
}

CycleClass milnor_cor12(const IntersectionScenario& sc) {
  require_r2(sc, "cor12");
  CycleClass pv = CycleClass::one(sc.ambient());
  CycleClass pc = CycleClass::one(sc.ambient());
  for (const auto& h : sc.hyps()) {
    pv *= h.classes.virt;
    pc *= h.classes.csm;
  }
  return sign_pow(sc.n() - sc.codim()) * (sc.tangent_power_inverse() * (pv - pc));
}

CycleClass milnor_pp_type(const IntersectionScenario& sc, PPMode mode) {
  require_r2(sc, "pp");
  require_hypersurfaces(sc, "pp");
  for (const auto& h : sc.hyps())
    if (!h.strata) throw Error("pp: '" + h.name + "' has no strata data");
  const AmbientPtr& amb = sc.ambient();
  const int n = sc.n(), r = sc.r();

  if (mode == PPMode::PerStratumAis) {
    CycleClass sum(amb);
    for (int i = 1; i <= r; ++i) {
      const HypersurfaceData& h = sc.hyps()[i - 1];
      const auto gamma = gamma_weights(*h.strata);
      const CycleClass inv_l = ring_inv(h.line.chern());
      const CycleClass a = a_product(sc, i);
      for (const auto& s : h.strata->strata()) {
        const std::int64_t g = gamma.at(s.name);
        if (g == 0) continue;
        sum += Integer(static_cast<long>(g)) * (a * (inv_l * *s.csm_closure));
      }
    }
    return sign_pow(r - 1) * (sc.tangent_power_inverse() * sum);
  }

  struct Choice {
    int eps;
    Integer coeff;
    const CycleClass* csm;
  };
  std::vector<std::vector<Choice>> options(r);
  for (int i = 0; i < r; ++i) {
    const HypersurfaceData& h = sc.hyps()[i];
    const auto gamma = gamma_weights(*h.strata);
    for (const auto& s : h.strata->strata()) {
      if (s.open) {
        options[i].push_back({1, 1, &open_csm(h)});
      } else if (gamma.at(s.name) != 0) {
        options[i].push_back({0, Integer(static_cast<long>(gamma.at(s.name))), &*s.csm_closure});
      }
    }
  }
  BundleClass sum_l = sc.hyps()[0].line;
  for (int i = 1; i < r; ++i) sum_l = direct_sum(sum_l, sc.hyps()[i].line);
  const CycleClass inv_sum_l = ring_inv(sum_l.chern());

  CycleClass sum(amb);
  std::vector<const Choice*> pick(r);
  std::function<void(int)> walk = [&](int i) {
    if (i == r) {
      int eps_total = 0;
      long thm_exponent = 0;
      for (int k = 0; k < r; ++k) {
        eps_total += pick[k]->eps;
        thm_exponent += static_cast<long>(n - sc.hyps()[k].classes.codim) * pick[k]->eps;
      }
      if (eps_total == r) return;
      const long exponent = static_cast<long>(n - 1) * eps_total;
      if ((exponent - thm_exponent) % 2 != 0) throw Error("pp: sign exponent disagrees with the product formula");
      Integer alpha = sign_pow(exponent);
      CycleClass kernel = inv_sum_l;
      CycleClass prod = CycleClass::one(amb);
      for (int k = 0; k < r; ++k) {
        alpha *= pick[k]->coeff;
        if (pick[k]->eps) kernel *= sc.hyps()[k].line.chern();
        prod *= *pick[k]->csm;
      }
      sum += alpha * (kernel * prod);
      return;
    }
    for (const auto& c : options[i]) {
      pick[i] = &c;
      walk(i + 1);
    }
  };
  walk(0);
  return sign_pow(static_cast<long>(n) * r - n) * (sc.tangent_power_inverse() * sum);
}

CycleClass milnor_le_formula(const IntersectionScenario& sc) {
  require_hypersurfaces(sc, "leformula");
  std::vector<LeHypersurface> le;
  for (const auto& h : sc.hyps()) {
    LeCycles cycles = h.le ? *h.le : milnor_to_le(split_by_dimension(h.classes.milnor), h.line);
    if (!cycles.ambient) cycles.ambient = sc.ambient();
    le.push_back({std::move(cycles), h.line, h.classes.virt, h.classes.csm});
  }
  return milnor_from_le_intersection(le, sc.tangent());
}

CycleClass milnor_aluffi_cor(const IntersectionScenario& sc) {
  require_r2(sc, "aluffi");
  require_hypersurfaces(sc, "aluffi");
  CycleClass sum(sc.ambient());
  for (int i = 1; i <= sc.r(); ++i) {
    const HypersurfaceData& h = sc.hyps()[i - 1];
    if (!h.segre) throw Error("aluffi: '" + h.name + "' has no Segre class of its singular locus");
    const CycleClass m = aluffi_milnor(h.line, mu_class(h.line, *h.segre));
    sum += a_product(sc, i) * m;
  }
  return sign_pow(sc.r() - 1) * (sc.tangent_power_inverse() * sum);
}

CycleClass intersection_virtual(const IntersectionScenario& sc) {
  require_hypersurfaces(sc, "intersection_virtual");
  BundleClass sum_l = sc.hyps()[0].line;
  CycleClass fundamental = sc.hyps()[0].line.chern_k(1);
  for (int i = 1; i < sc.r(); ++i) {
    sum_l = direct_sum(sum_l, sc.hyps()[i].line);
    fundamental *= sc.hyps()[i].line.chern_k(1);
  }
  return sc.tangent().chern() * ring_inv(sum_l.chern()) * fundamental;
}

FormulaSelection FormulaSelection::parse(const std::string& name) {
  if (name == "all") return all();
  FormulaSelection s;
  s.thm41 = s.cor11 = s.cor12 = s.pp = s.aluffi = s.le = false;
  if (name == "thm41") s.thm41 = true;
  else if (name == "cor11") s.cor11 = true;
  else if (name == "cor12") s.cor12 = true;
  else if (name == "pp") s.pp = true;
  else if (name == "aluffi") s.aluffi = true;
  else if (name == "le") s.le = true;
  else throw Error("unknown formula '" + name + "' (expected thm41|cor11|cor12|pp|aluffi|le|all)");
  return s;
}

namespace {

bool all_equal(const std::vector<std::pair<std::string, CycleClass>>& results, std::string& detail) {
  bool ok = true;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (!(results[i].second == results[0].second)) {
      ok = false;
      detail += results[i].first + " = " + results[i].second.str() + " differs from " + results[0].first + " = " +
                results[0].second.str() + "; ";
    }
  }
  if (detail.size() >= 2) detail.resize(detail.size() - 2);
  return ok;
}

bool vanishes_below(const CycleClass& c, int codim) {
  for (int k : c.codimensions())
    if (k < codim) return false;
  return true;
}

}  // namespace

ScenarioReport validate_hypersurface(const HypersurfaceData& h, const FormulaSelection& formulas) {
  ScenarioReport rep;
  rep.title = h.name;
  const int n = h.line.ambient()->dimension();
  rep.add_class(h.name + ".virt", h.classes.virt);
  rep.add_class(h.name + ".csm", h.classes.csm);
  rep.add_class(h.name + ".milnor", h.classes.milnor);
  rep.add_value(h.name + ".chi", degree(h.classes.csm).get_str());

  std::vector<std::pair<std::string, CycleClass>> routes;
  if (h.strata) {
    routes.emplace_back("pp", milnor_pp(*h.strata));
    const Stratum& open = h.strata->open_stratum();
    if (open.csm_closure) {
      routes.emplace_back("definition", milnor_from_definition(h.classes.virt, *open.csm_closure, n, 1));
      const Integer chi = stratified_chi(*h.strata);
      rep.add_value(h.name + ".chi[strata]", chi.get_str());
      rep.add_verdict(h.name + ": chi oracle", chi == degree(h.classes.csm),
                      "stratified chi " + chi.get_str() + ", degree of c^SM " + degree(h.classes.csm).get_str());
    }
    bool isolated = true;
    Integer mu_sum = 0;
    for (const auto& s : h.strata->strata()) {
      if (s.open) continue;
      if (s.dim != 0) isolated = false;
      mu_sum += static_cast<long>(mu_weight(s, *h.strata));
    }
    if (isolated && h.strata->has_singular_strata()) {
      rep.add_verdict(h.name + ": sum of local Milnor numbers", mu_sum == degree(h.classes.milnor),
                      "sum " + mu_sum.get_str() + ", degree " + degree(h.classes.milnor).get_str());
    }
  }
  if (h.segre && formulas.aluffi) routes.emplace_back("aluffi", aluffi_milnor(h.line, mu_class(h.line, *h.segre)));
  if (h.le && formulas.le) routes.emplace_back("le", total(h.line.ambient(), le_to_milnor(*h.le, h.line)));

  for (const auto& [k, c] : routes) rep.add_class(h.name + ".milnor[" + k + "]", c);
  if (routes.size() >= 2) {
    std::string detail;
    const bool ok = all_equal(routes, detail);
    rep.add_verdict(h.name + ": Milnor class routes agree", ok, detail);
    rep.formulas_agree = ok;
  }
  return rep;
}

ScenarioReport cross_validate(const IntersectionScenario& sc, const CrossValidateOptions& opts) {
  ScenarioReport rep;
  for (std::size_t i = 0; i < sc.hyps().size(); ++i) rep.title += (i ? " cap " : "") + sc.hyps()[i].name;
  if (opts.include_hypersurfaces)
    for (const auto& h : sc.hyps()) rep.merge(validate_hypersurface(h, opts.formulas));
  if (sc.r() < 2) return rep;

  bool have_strata = true, have_segre = true;
  for (const auto& h : sc.hyps()) {
    have_strata = have_strata && h.strata.has_value();
    have_segre = have_segre && h.segre.has_value();
  }
  bool all_hyp = true;
  for (const auto& h : sc.hyps()) all_hyp = all_hyp && h.classes.codim == 1;

  std::vector<std::pair<std::string, CycleClass>> results;
  const auto& f = opts.formulas;
  if (f.thm41) results.emplace_back("thm41", milnor_thm41(sc));
  if (f.cor11) results.emplace_back("cor11", milnor_cor11(sc));
  if (f.cor12) results.emplace_back("cor12", milnor_cor12(sc));
  if (f.pp && have_strata && all_hyp) {
    results.emplace_back("pp_ais", milnor_pp_type(sc, PPMode::PerStratumAis));
    results.emplace_back("pp_full", milnor_pp_type(sc, PPMode::FullExpansion));
  }
  if (f.le && all_hyp) results.emplace_back("leformula", milnor_le_formula(sc));
  if (f.aluffi && have_segre && all_hyp) results.emplace_back("aluffi", milnor_aluffi_cor(sc));
  for (const auto& [k, c] : results) rep.add_class("X.milnor[" + k + "]", c);
  if (results.empty()) return rep;

  std::string detail;
  const bool agree = all_equal(results, detail);
  rep.add_verdict("X: intersection formulas agree", agree, detail);
  rep.formulas_agree = rep.formulas_agree.value_or(true) && agree;

  const CycleClass& m = results.front().second;
  if (all_hyp) {
    const CycleClass virt = intersection_virtual(sc);
    const CycleClass csm = csm_from_milnor(virt, m, sc.n(), sc.codim());
    rep.add_class("X.virt", virt);
    rep.add_class("X.csm", csm);
    rep.add_value("X.chi", degree(csm).get_str());
    if (opts.expected_chi) {
      rep.add_verdict("X: chi oracle", degree(csm) == *opts.expected_chi,
                      "strata give " + opts.expected_chi->get_str() + ", degree of c^SM " + degree(csm).get_str());
    }
  }
  if (opts.support_min_codim) {
    bool ok = true;
    for (const auto& [k, c] : results) ok = ok && vanishes_below(c, *opts.support_min_codim);
    rep.add_verdict("X: support", ok, "classes vanish below codimension " + std::to_string(*opts.support_min_codim));
  }
  return rep;
}

}  // namespace milnor
