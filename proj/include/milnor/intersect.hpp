#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/lecycles.hpp"
#include "milnor/report.hpp"

namespace milnor {

/// One X_i of an intersection, with whatever descriptive data is known.
struct HypersurfaceData {
  std::string name;
  BundleClass line;
  ClassBundle3 classes;
  std::optional<StratifiedHypersurface> strata;
  std::optional<LeCycles> le;
  std::optional<CycleClass> segre;

  /// Classes from strata (Parusinski-Pragacz route).
  static HypersurfaceData from_strata(std::string name, StratifiedHypersurface hyp);
  /// Classes from Le cycles.
  static HypersurfaceData from_le(std::string name, BundleClass line, LeCycles le);
};

/// eps_i = 1 selects c^SM(X_i), eps_i = 0 selects M(X_i).
struct TermSelector {
  std::vector<int> eps;
  bool all_csm() const;
};

/// X = X_1 cap ... cap X_r in one ambient. c(TM^{r-1})^{-1} is computed once.
class IntersectionScenario {
 public:
  IntersectionScenario(AmbientPtr ambient, std::vector<HypersurfaceData> hyps, BundleClass tangent);
  explicit IntersectionScenario(std::vector<HypersurfaceData> hyps);

  const AmbientPtr& ambient() const { return ambient_; }
  const std::vector<HypersurfaceData>& hyps() const { return hyps_; }
  int r() const { return static_cast<int>(hyps_.size()); }
  int n() const { return ambient_->dimension(); }
  /// Codimension of X, sum of the d_i.
  int codim() const;
  const BundleClass& tangent() const { return tangent_; }
  const CycleClass& tangent_power_inverse() const { return tm_inv_; }

  bool transversality_assumed = true;

 private:
  AmbientPtr ambient_;
  std::vector<HypersurfaceData> hyps_;
  BundleClass tangent_;
  CycleClass tm_inv_;
};

struct SignedSelector {
  TermSelector selector;
  int sign;  ///< including the global (-1)^{nr-n}
};

/// The selectors of the main product formula with their total signs.
std::vector<SignedSelector> thm41_terms(const IntersectionScenario& sc);

CycleClass milnor_thm41(const IntersectionScenario& sc);
/// a_{1,i} ... a_{r-1,i} with a_{j,i} = c^Vir(X_{j+1}) for j >= i, c^SM(X_j) for j < i.
CycleClass a_product(const IntersectionScenario& sc, int i);
CycleClass milnor_cor11(const IntersectionScenario& sc);
CycleClass milnor_cor12(const IntersectionScenario& sc);

enum class PPMode { PerStratumAis, FullExpansion };
CycleClass milnor_pp_type(const IntersectionScenario& sc, PPMode mode);
/// Le-cycle route; hypersurfaces without Le data use milnor_to_le of their Milnor class.
CycleClass milnor_le_formula(const IntersectionScenario& sc);
/// Aluffi route: needs a Segre class on every hypersurface.
CycleClass milnor_aluffi_cor(const IntersectionScenario& sc);

/// c(TM) c(L_1 + ... + L_r)^{-1} [X_1]...[X_r].
CycleClass intersection_virtual(const IntersectionScenario& sc);

struct FormulaSelection {
  bool thm41 = true, cor11 = true, cor12 = true, pp = true, aluffi = true, le = true;
  static FormulaSelection all() { return {}; }
  /// "thm41" | "cor11" | "cor12" | "pp" | "aluffi" | "all"
  static FormulaSelection parse(const std::string& name);
};

struct CrossValidateOptions {
  FormulaSelection formulas;
  /// Sum of chi of the strata of X, when the fixture supplies it.
  std::optional<Integer> expected_chi;
  /// Every computed intersection class must vanish below this codimension.
  std::optional<int> support_min_codim;
  /// Also run validate_hypersurface on each member.
  bool include_hypersurfaces = true;
};

/// Runs every applicable formula, checks exact pairwise agreement, and the
/// Euler characteristic and support oracles when data is present.
ScenarioReport cross_validate(const IntersectionScenario& sc, const CrossValidateOptions& opts = {});

/// Per-hypersurface checks: PP route vs definition (when c^SM of X is
/// supplied), Aluffi and Le routes, chi oracle.
ScenarioReport validate_hypersurface(const HypersurfaceData& h, const FormulaSelection& formulas = {});

}  // namespace milnor
