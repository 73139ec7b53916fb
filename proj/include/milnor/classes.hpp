#pragma once

#include "milnor/strata.hpp"

namespace milnor {

/// Virtual, Schwartz-MacPherson and Milnor classes of one zero locus,
/// all pushed forward to the ambient. Satisfies
///   milnor = (-1)^{dim M - codim} (virt - csm).
struct ClassBundle3 {
  CycleClass virt;
  CycleClass csm;
  CycleClass milnor;
  int codim = 1;
};

/// (-1)^k as an Integer.
inline Integer sign_pow(long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

/// c(TM) c(E)^{-1} x_class; x_class must equal top_chern(e).
CycleClass virtual_class(const AmbientPtr& ambient, const BundleClass& e, const CycleClass& x_class);
/// Same, for ambients whose tangent class is supplied by the caller.
CycleClass virtual_class(const BundleClass& tangent, const BundleClass& e, const CycleClass& x_class);

/// sum_S gamma_S c(L)^{-1} c^SM(closure S).
CycleClass milnor_pp(const StratifiedHypersurface& hyp);

/// virt - (-1)^{dim_m - codim} milnor.
CycleClass csm_from_milnor(const CycleClass& virt, const CycleClass& milnor, int dim_m, int codim);
/// (-1)^{dim_m - codim} (virt - csm).
CycleClass milnor_from_definition(const CycleClass& virt, const CycleClass& csm, int dim_m, int codim);

/// Sign flip on odd ambient codimensions.
CycleClass aluffi_dual(const CycleClass& a);
/// sum_j a^j / c(L)^j, with a^j the ambient-codimension-j part.
CycleClass aluffi_tensor(const CycleClass& a, const BundleClass& l);

struct SegreCenter {
  enum class Kind { Points, Linear };
  Kind kind = Kind::Points;
  int value = 0;  ///< number of points, or dimension m of the linear centre

  static SegreCenter points(int k) { return {Kind::Points, k}; }
  static SegreCenter linear(int m) { return {Kind::Linear, m}; }
};

/// Segre class of a finite set of points (k [pt]) or of a linear P^m in P^n
/// ((1+h)^{-(n-m)} h^{n-m}).
CycleClass segre_builtin(const AmbientPtr& ambient, const SegreCenter& center);
/// Parses "points(k)" or "linear(m)". Anything else is rejected.
SegreCenter parse_segre_center(const std::string& text);

/// c(T*M (x) L) s(Sing X, M).
CycleClass mu_class(const StratifiedHypersurface& hyp, const CycleClass& segre);
CycleClass mu_class(const BundleClass& line, const CycleClass& segre);
/// (-1)^n c(L)^{n-1} (mu^vee (x) L), n = dim M.
CycleClass aluffi_milnor(const StratifiedHypersurface& hyp, const CycleClass& mu);
CycleClass aluffi_milnor(const BundleClass& line, const CycleClass& mu);

/// Euler characteristic carried by a CSM-type class.
Integer chi_of_closure(const CycleClass& csm);

/// Virtual class from the line bundle, Milnor class from the strata,
/// CSM class from the definition.
ClassBundle3 hypersurface_classes(const StratifiedHypersurface& hyp);

}  // namespace milnor
