#pragma once

#include <map>
#include <vector>

#include "milnor/classes.hpp"

namespace milnor {

/// Classes graded by dimension: entry k lives in codimension dim M - k.
using GradedClasses = std::map<int, CycleClass>;

/// Global Le cycles Lambda_k of a hypersurface.
struct LeCycles {
  AmbientPtr ambient;
  GradedClasses classes;

  /// Lambda_k, or zero when absent.
  CycleClass at(int k) const;
  /// Drops zero entries and checks homogeneity.
  void validate() const;
};

/// Splits a class into its pieces of each dimension (zero pieces omitted).
GradedClasses split_by_dimension(const CycleClass& a);
CycleClass total(const AmbientPtr& ambient, const GradedClasses& pieces);

/// M_k = sum_{l>=0} (-1)^{k+l} C(l+k, k) c1(L)^l Lambda_{l+k}.
GradedClasses le_to_milnor(const LeCycles& le, const BundleClass& l);
/// Inverse of le_to_milnor, by back-substitution from the top dimension.
LeCycles milnor_to_le(const GradedClasses& milnor, const BundleClass& l);

struct LeHypersurface {
  LeCycles le;
  BundleClass line;
  CycleClass virt;
  CycleClass csm;
};

/// Total Milnor class of X_1 cap ... cap X_r from the Le cycles of the
/// hypersurfaces:
///   (-1)^{r-1} c(TM^{r-1})^{-1} sum_i a_{1,i}...a_{r-1,i} sum_{k,l} (-1)^{k+l} C(l+k,k) c1(L_i)^l Lambda_{l+k}(X_i)
/// with a_{j,i} = c^Vir(X_{j+1}) for j >= i and c^SM(X_j) for j < i.
CycleClass milnor_from_le_intersection(const std::vector<LeHypersurface>& hyps, const BundleClass& tangent);

}  // namespace milnor
