#include "milnor/lecycles.hpp"

namespace milnor {

CycleClass LeCycles::at(int k) const {
  auto it = classes.find(k);
  return it == classes.end() ? CycleClass::zero(ambient) : it->second;
}

void LeCycles::validate() const {
  if (!ambient) throw Error("Le cycles without ambient");
  const int n = ambient->dimension();
  for (const auto& [k, c] : classes) {
    if (k < 0 || k > n) throw Error("Le cycle index " + std::to_string(k) + " out of range");
    if (!same_ambient(c.ambient(), ambient)) throw Error("Le cycle on the wrong ambient");
    if (!c.is_homogeneous(n - k))
      throw Error("Le cycle Lambda_" + std::to_string(k) + " = " + c.str() + " is not of codimension " +
                  std::to_string(n - k));
  }
}

GradedClasses split_by_dimension(const CycleClass& a) {
  GradedClasses out;
  const int n = a.ambient()->dimension();
  for (int codim : a.codimensions()) out.emplace(n - codim, component(a, codim));
  return out;
}

CycleClass total(const AmbientPtr& ambient, const GradedClasses& pieces) {
  CycleClass out(ambient);
  for (const auto& [k, c] : pieces) out += c;
  return out;
}

namespace {

void check_line(const AmbientPtr& ambient, const BundleClass& l) {
  if (l.rank() != 1) throw Error("Le cycle conversion needs a line bundle");
  if (!same_ambient(ambient, l.ambient())) throw Error("Le cycle conversion: ambient mismatch");
}

}  // namespace

GradedClasses le_to_milnor(const LeCycles& le, const BundleClass& l) {
  le.validate();
  check_line(le.ambient, l);
  const int n = le.ambient->dimension();
  const CycleClass c1 = l.chern_k(1);
  GradedClasses out;
  for (int k = 0; k <= n; ++k) {
    CycleClass mk(le.ambient);
    CycleClass c1_pow = CycleClass::one(le.ambient);
    for (int j = 0; k + j <= n; ++j) {
      const CycleClass lam = le.at(k + j);
      if (!lam.is_zero()) mk += (sign_pow(k + j) * binomial(j + k, k)) * (c1_pow * lam);
      c1_pow *= c1;
    }
    if (!mk.is_zero()) out.emplace(k, std::move(mk));
  }
  return out;
}

LeCycles milnor_to_le(const GradedClasses& milnor, const BundleClass& l) {
  if (milnor.empty()) return LeCycles{l.ambient(), {}};
  const AmbientPtr amb = milnor.begin()->second.ambient();
  check_line(amb, l);
  const int n = amb->dimension();
  for (const auto& [k, c] : milnor)
    if (k < 0 || k > n || !c.is_homogeneous(n - k))
      throw Error("milnor_to_le: piece M_" + std::to_string(k) + " = " + c.str() + " is not homogeneous of dimension " +
                  std::to_string(k));
  const CycleClass c1 = l.chern_k(1);
  std::vector<CycleClass> c1_pow{CycleClass::one(amb)};
  for (int j = 1; j <= n; ++j) c1_pow.push_back(c1_pow.back() * c1);

  LeCycles le{amb, {}};
  for (int k = n; k >= 0; --k) {
    auto it = milnor.find(k);
    CycleClass rest = it == milnor.end() ? CycleClass::zero(amb) : it->second;
    for (int j = 1; k + j <= n; ++j) {
      const CycleClass lam = le.at(k + j);
      if (!lam.is_zero()) rest -= (sign_pow(k + j) * binomial(j + k, k)) * (c1_pow[j] * lam);
    }
    CycleClass lam_k = sign_pow(k) * rest;
    if (!lam_k.is_zero()) le.classes.emplace(k, std::move(lam_k));
  }
  return le;
}

CycleClass milnor_from_le_intersection(const std::vector<LeHypersurface>& hyps, const BundleClass& tangent) {
  if (hyps.empty()) throw Error("milnor_from_le_intersection: no hypersurfaces");
  const AmbientPtr amb = tangent.ambient();
  const int r = static_cast<int>(hyps.size());
  for (const auto& h : hyps) {
    if (!same_ambient(h.le.ambient, amb) || !same_ambient(h.line.ambient(), amb) ||
        !same_ambient(h.virt.ambient(), amb) || !same_ambient(h.csm.ambient(), amb))
      throw Error("milnor_from_le_intersection: ambient mismatch");
  }
  CycleClass sum(amb);
  for (int i = 1; i <= r; ++i) {
    CycleClass a = CycleClass::one(amb);
    for (int j = 1; j <= r - 1; ++j) a *= (j >= i) ? hyps[j].virt : hyps[j - 1].csm;
    const auto pieces = le_to_milnor(hyps[i - 1].le, hyps[i - 1].line);
    sum += a * total(amb, pieces);
  }
  const CycleClass prefactor = ring_ipow(tangent.chern(), -(r - 1));
  return sign_pow(r - 1) * (prefactor * sum);
}

}  // namespace milnor
