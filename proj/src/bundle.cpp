#include "milnor/bundle.hpp"

namespace milnor {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BundleClass::BundleClass(int rank, CycleClass chern) : rank_(rank), chern_(std::move(chern)) {
  if (rank_ < 0) throw Error("bundle rank must be nonnegative");
  if (!chern_.ambient()) throw Error("bundle without ambient");
  if (chern_.coefficient(Monomial(chern_.ambient()->num_generators(), 0)) != 1)
    throw Error("total Chern class " + chern_.str() + " does not start with 1");
  for (int k : chern_.codimensions())
    if (k > rank_)
      throw Error("total Chern class " + chern_.str() + " has a term in codimension " + std::to_string(k) +
                  " above the rank " + std::to_string(rank_));
}

CycleClass BundleClass::chern_k(int k) const {
  if (k < 0 || k > ambient()->dimension()) return CycleClass::zero(ambient());
  return component(chern_, k);
}

BundleClass line_bundle(const AmbientPtr& ambient, const std::vector<int>& multidegree) {
  if (ambient->kind() == AmbientSpace::Kind::ProjBundle)
    throw Error("line_bundle: use line_bundle_from_c1 on a projective bundle");
  if (static_cast<int>(multidegree.size()) != ambient->num_generators())
    throw Error("line_bundle: expected " + std::to_string(ambient->num_generators()) + " degrees, got " +
                std::to_string(multidegree.size()));
  CycleClass c1(ambient);
  for (int i = 0; i < ambient->num_generators(); ++i)
    c1 += Integer(multidegree[i]) * CycleClass::generator(ambient, i);
  return line_bundle_from_c1(c1);
}

BundleClass line_bundle_from_c1(const CycleClass& c1) {
  if (!c1.is_homogeneous(1)) throw Error("line bundle c1 must be homogeneous of codimension 1");
  return BundleClass(1, CycleClass::one(c1.ambient()) + c1);
}

BundleClass trivial_bundle(const AmbientPtr& ambient, int rank) {
  return BundleClass(rank, CycleClass::one(ambient));
}

BundleClass direct_sum(const BundleClass& e, const BundleClass& f) {
  if (!same_ambient(e.ambient(), f.ambient())) throw Error("direct_sum: ambient mismatch");
  return BundleClass(e.rank() + f.rank(), e.chern() * f.chern());
}

BundleClass dual(const BundleClass& e) {
  CycleClass out(e.ambient());
  for (int k = 0; k <= e.ambient()->dimension(); ++k) {
    CycleClass ck = component(e.chern(), k);
    out += (k % 2 == 0) ? ck : -ck;
  }
  return BundleClass(e.rank(), out);
}

BundleClass tensor_line(const BundleClass& e, const BundleClass& l) {
  if (l.rank() != 1) throw Error("tensor_line: second argument has rank " + std::to_string(l.rank()));
  if (!same_ambient(e.ambient(), l.ambient())) throw Error("tensor_line: ambient mismatch");
  const int n = e.ambient()->dimension();
  const CycleClass ell = l.chern_k(1);
  std::vector<CycleClass> ell_pow{CycleClass::one(e.ambient())};
  for (int j = 1; j <= n; ++j) ell_pow.push_back(ell_pow.back() * ell);
  CycleClass out(e.ambient());
  for (int k = 0; k <= std::min(e.rank(), n); ++k)
    for (int i = 0; i <= k; ++i) out += binomial(e.rank() - i, k - i) * (e.chern_k(i) * ell_pow[k - i]);
  return BundleClass(e.rank(), out);
}

BundleClass tangent_bundle(const AmbientPtr& ambient) {
  if (ambient->kind() == AmbientSpace::Kind::ProjBundle)
    throw Error("tangent_bundle: projective-bundle tangent classes live in the projbundle module");
  CycleClass c = CycleClass::one(ambient);
  const auto& dims = ambient->factor_dims();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    CycleClass factor = CycleClass::one(ambient) + CycleClass::generator(ambient, static_cast<int>(i));
    c *= ring_pow(factor, dims[i] + 1);
  }
  return BundleClass(ambient->dimension(), c);
}

CycleClass top_chern(const BundleClass& e) { return e.chern_k(e.rank()); }

}  // namespace milnor
