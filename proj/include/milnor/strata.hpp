#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "milnor/bundle.hpp"

namespace milnor {

struct Stratum {
  std::string name;
  CycleClass closure_class;
  /// c^SM of the closure, pushed forward. Optional only for the open
  /// stratum, where it is the (unknown) CSM class of the hypersurface.
  std::optional<CycleClass> csm_closure;
  int dim = 0;
  std::int64_t milnor_fiber_chi = 1;
  /// Strata whose closures contain this one.
  std::set<std::string> contained_in;
  bool open = false;
};

/// A hypersurface X = Z(s) for a section s of a line bundle L, with Whitney
/// strata. The constructor normalizes `contained_in` to its transitive
/// closure (the open stratum is added to every singular stratum) and
/// rejects cycles or dimension-inconsistent incidences.
class StratifiedHypersurface {
 public:
  StratifiedHypersurface(BundleClass line_bundle, std::vector<Stratum> strata);

  const AmbientPtr& ambient() const { return line_.ambient(); }
  const BundleClass& line_bundle() const { return line_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  const CycleClass& hypersurface_class() const { return hyp_class_; }
  const Stratum& open_stratum() const;
  const Stratum& stratum(const std::string& name) const;
  int dim() const { return ambient()->dimension() - 1; }
  bool has_singular_strata() const { return strata_.size() > 1; }

  /// Strata sorted by descending dimension (open stratum first).
  std::vector<const Stratum*> by_descending_dim() const;

 private:
  BundleClass line_;
  std::vector<Stratum> strata_;
  CycleClass hyp_class_;
};

/// Closure data for the common cases: a point, or a linear P^m in P^n.
Stratum point_stratum(const AmbientPtr& ambient, std::string name, std::int64_t milnor_fiber_chi,
                      std::set<std::string> contained_in = {});
Stratum linear_stratum(const AmbientPtr& ambient, std::string name, int m, std::int64_t milnor_fiber_chi,
                       std::set<std::string> contained_in = {});
/// c^SM of a linear P^m in P^n: (1+h)^{m+1} h^{n-m}.
CycleClass linear_csm(const AmbientPtr& ambient, int m);

/// (-1)^{dim X} (chi(F_x) - 1).
std::int64_t mu_weight(const Stratum& s, const StratifiedHypersurface& hyp);

/// gamma_S = mu_S - sum over strata S' != S with S in closure(S') of gamma_S'.
std::map<std::string, std::int64_t> gamma_weights(const StratifiedHypersurface& hyp);

/// Euler characteristics of the (open) strata by inclusion-exclusion from
/// chi of the closures (degree of csm_closure).
std::map<std::string, Integer> open_stratum_chis(const StratifiedHypersurface& hyp);

/// sum_S weight_S chi(S) for a constructible function given by its values
/// on strata. Missing strata have weight zero.
Integer stratified_chi(const StratifiedHypersurface& hyp, const std::map<std::string, std::int64_t>& weights);
/// The constant function 1, i.e. chi(X).
Integer stratified_chi(const StratifiedHypersurface& hyp);

}  // namespace milnor
