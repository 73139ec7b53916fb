#include "milnor/classes.hpp"

#include <regex>

namespace milnor {

CycleClass virtual_class(const BundleClass& tangent, const BundleClass& e, const CycleClass& x_class) {
  if (!(x_class == top_chern(e)))
    throw Error("virtual_class: zero-set class " + x_class.str() + " differs from c_top(E) = " + top_chern(e).str() +
                "; the section is not regular");
  return tangent.chern() * ring_inv(e.chern()) * x_class;
}

CycleClass virtual_class(const AmbientPtr& ambient, const BundleClass& e, const CycleClass& x_class) {
  if (!same_ambient(ambient, e.ambient())) throw Error("virtual_class: bundle on a different ambient");
  return virtual_class(tangent_bundle(ambient), e, x_class);
}

CycleClass milnor_pp(const StratifiedHypersurface& hyp) {
  const auto gamma = gamma_weights(hyp);
  const CycleClass inv_l = ring_inv(hyp.line_bundle().chern());
  CycleClass out(hyp.ambient());
  for (const auto& s : hyp.strata()) {
    const std::int64_t g = gamma.at(s.name);
    if (g == 0) continue;
    out += Integer(static_cast<long>(g)) * (inv_l * *s.csm_closure);
  }
  return out;
}

CycleClass csm_from_milnor(const CycleClass& virt, const CycleClass& milnor, int dim_m, int codim) {
  return virt - sign_pow(dim_m - codim) * milnor;
}

CycleClass milnor_from_definition(const CycleClass& virt, const CycleClass& csm, int dim_m, int codim) {
  return sign_pow(dim_m - codim) * (virt - csm);
}

CycleClass aluffi_dual(const CycleClass& a) {
  Coeffs out;
  for (const auto& [m, c] : a.coeffs()) out.emplace(m, codimension(m) % 2 == 0 ? c : Integer(-c));
  return CycleClass(a.ambient(), out);
}

CycleClass aluffi_tensor(const CycleClass& a, const BundleClass& l) {
  if (l.rank() != 1) throw Error("aluffi_tensor: not a line bundle");
  const CycleClass inv_l = ring_inv(l.chern());
  CycleClass out(a.ambient());
  CycleClass factor = CycleClass::one(a.ambient());
  for (int j = 0; j <= a.ambient()->dimension(); ++j) {
    out += component(a, j) * factor;
    factor *= inv_l;
  }
  return out;
}

CycleClass segre_builtin(const AmbientPtr& ambient, const SegreCenter& center) {
  switch (center.kind) {
    case SegreCenter::Kind::Points:
      if (center.value < 0) throw Error("segre: negative number of points");
      return Integer(center.value) * CycleClass::point(ambient);
    case SegreCenter::Kind::Linear: {
      if (ambient->kind() != AmbientSpace::Kind::ProjSpace)
        throw Error("segre: linear centres are only supported in a projective space");
      const int n = ambient->dimension();
      const int m = center.value;
      if (m < 0 || m >= n) throw Error("segre: linear(" + std::to_string(m) + ") must satisfy 0 <= m < " + std::to_string(n));
      CycleClass h = CycleClass::generator(ambient, 0);
      return ring_ipow(CycleClass::one(ambient) + h, -(n - m)) * ring_pow(h, n - m);
    }
  }
  throw Error("segre: unsupported centre");
}

SegreCenter parse_segre_center(const std::string& text) {
  static const std::regex re(R"(\s*(points|linear)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw Error("segre: \"" + text +
                "\" is not a builtin centre; only points(k) and linear(m) are supported, Segre classes of "
                "other singular schemes are not computed");
  const int v = std::stoi(m[2]);
  return m[1] == "points" ? SegreCenter::points(v) : SegreCenter::linear(v);
}

CycleClass mu_class(const BundleClass& line, const CycleClass& segre) {
  const BundleClass twisted = tensor_line(dual(tangent_bundle(line.ambient())), line);
  return twisted.chern() * segre;
}

CycleClass mu_class(const StratifiedHypersurface& hyp, const CycleClass& segre) {
  return mu_class(hyp.line_bundle(), segre);
}

CycleClass aluffi_milnor(const BundleClass& line, const CycleClass& mu) {
  const int n = line.ambient()->dimension();
  // Overall sign fixed against the Parusinski-Pragacz route on the nodal cubic.
  return sign_pow(n) * (ring_pow(line.chern(), n - 1) * aluffi_tensor(aluffi_dual(mu), line));
}

CycleClass aluffi_milnor(const StratifiedHypersurface& hyp, const CycleClass& mu) {
  return aluffi_milnor(hyp.line_bundle(), mu);
}

Integer chi_of_closure(const CycleClass& csm) { return degree(csm); }

ClassBundle3 hypersurface_classes(const StratifiedHypersurface& hyp) {
  ClassBundle3 out;
  const int n = hyp.ambient()->dimension();
  out.codim = 1;
  out.virt = virtual_class(hyp.ambient(), hyp.line_bundle(), hyp.hypersurface_class());
  out.milnor = milnor_pp(hyp);
  out.csm = csm_from_milnor(out.virt, out.milnor, n, 1);
  return out;
}

}  // namespace milnor
