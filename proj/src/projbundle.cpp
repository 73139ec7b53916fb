#include "milnor/projbundle.hpp"

namespace milnor {

ProjBundleRing::ProjBundleRing(BundleClass e)
    : ProjBundleRing(e, AmbientSpace::proj_bundle(e.ambient(), e.rank(), e.chern())) {}

ProjBundleRing::ProjBundleRing(BundleClass e, AmbientPtr total) : e_(std::move(e)), total_(std::move(total)) {
  if (!total_ || total_->kind() != AmbientSpace::Kind::ProjBundle) throw Error("ProjBundleRing: total space is not a projective bundle");
  if (!same_ambient(total_->base(), e_.ambient()) || total_->bundle_rank() != e_.rank())
    throw Error("ProjBundleRing: total space does not match the bundle");
}

CycleClass ProjBundleRing::zeta() const { return CycleClass::generator(total_, total_->num_generators() - 1); }

CycleClass ProjBundleRing::pullback(const CycleClass& base_class) const {
  if (!same_ambient(base_class.ambient(), base())) throw Error("pullback: class is not on the base");
  Coeffs out;
  for (const auto& [m, c] : base_class.coeffs()) {
    Monomial up = m;
    up.push_back(0);
    out.emplace(std::move(up), c);
  }
  return CycleClass(total_, out);
}

BundleClass ProjBundleRing::pullback(const BundleClass& b) const { return BundleClass(b.rank(), pullback(b.chern())); }

BundleClass ProjBundleRing::o1() const { return line_bundle_from_c1(zeta()); }

BundleClass split_bundle(const AmbientPtr& base, const std::vector<std::vector<int>>& multidegrees) {
  BundleClass e = trivial_bundle(base, 0);
  for (const auto& d : multidegrees) e = direct_sum(e, line_bundle(base, d));
  return e;
}

namespace {

CycleClass sub_bundle_series(const ProjBundleRing& ring) {
  const CycleClass one = CycleClass::one(ring.total());
  return ring.pullback(ring.bundle().chern()) * ring_inv(one + ring.zeta());
}

}  // namespace

BundleClass taut_sub_chern(const ProjBundleRing& ring) { return BundleClass(ring.rank() - 1, sub_bundle_series(ring)); }

CycleClass grothendieck_defect(const ProjBundleRing& ring) {
  if (ring.rank() > ring.total()->dimension()) return CycleClass::zero(ring.total());
  return component(sub_bundle_series(ring), ring.rank());
}

CycleClass pb_pushforward(const ProjBundleRing& ring, const CycleClass& a) {
  if (!same_ambient(a.ambient(), ring.total())) throw Error("pushforward: class is not on the projective bundle");
  Coeffs out;
  for (const auto& [m, c] : a.coeffs()) {
    if (m.back() != ring.rank() - 1) continue;
    out.emplace(Monomial(m.begin(), m.end() - 1), c);
  }
  return CycleClass(ring.base(), out);
}

Verdict verify_tangent_identities(const ProjBundleRing& ring,
                                  const std::optional<std::vector<std::vector<int>>>& splitting) {
  Verdict v{"tangent identities", true, {}};
  auto fail = [&](const std::string& what) {
    v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + what;
  };
  const AmbientPtr& total = ring.total();
  const int r = ring.rank();
  const CycleClass one = CycleClass::one(total);
  const CycleClass z = ring.zeta();
  const BundleClass e_dual = ring.pullback(dual(ring.bundle()));

  // Relative tangent class from the Euler sequence 0 -> O -> p^*E^vee (x) O(1) -> T_rel -> 0.
  const CycleClass twisted = tensor_line(e_dual, ring.o1()).chern();
  const CycleClass c_rel = twisted * ring_inv(trivial_bundle(total, 1).chern());

  // Independent expansion: c(E (x) L) = sum_i c_i(E) (1 + c1 L)^{r-i}.
  CycleClass expansion(total);
  for (int i = 0; i <= r; ++i) expansion += e_dual.chern_k(i) * ring_pow(one + z, r - i);

  // Tangent class of P(E^vee) from 0 -> T_rel -> T P -> p^*T base -> 0.
  const CycleClass c_base = ring.pullback(tangent_bundle(ring.base()).chern());
  const CycleClass c_total = c_base * expansion;

  if (!(c_base * ring_inv(c_total) * c_rel == one))
    fail("c(p^*TM)/c(TP) is not c(T_rel)^{-1}");
  if (!(c_total * ring_inv(c_base) == c_rel)) fail("c(p^*E^vee (x) O(1)) = " + c_rel.str() + " but c(T_rel) = " +
                                                  (c_total * ring_inv(c_base)).str());
  if (r <= total->dimension()) {
    const CycleClass top = component(c_rel, r);
    if (!top.is_zero()) fail("c_" + std::to_string(r) + "(T_rel) = " + top.str() + " does not vanish");
  }
  if (splitting) {
    CycleClass prod = one;
    for (const auto& d : *splitting) prod *= one + z - ring.pullback(line_bundle(ring.base(), d).chern_k(1));
    if (!(prod == c_rel)) fail("product over the splitting gives " + prod.str());
  }
  return v;
}

CycleClass lemma2_transfer(const BundleClass& f, const CycleClass& a) {
  if (!same_ambient(f.ambient(), a.ambient())) throw Error("lemma2_transfer: ambient mismatch");
  return ring_inv(f.chern()) * top_chern(f) * a;
}

CycleClass milnor_general(const ProjBundleRing& ring, const CycleClass& milnor_of_tilde) {
  if (!same_ambient(milnor_of_tilde.ambient(), ring.total()))
    throw Error("milnor_general: M(Z(s~)) must live on P(E^vee)");
  const BundleClass twisted = tensor_line(ring.pullback(dual(ring.bundle())), ring.o1());
  const BundleClass f = taut_sub_chern(ring);
  const CycleClass kernel =
      ring_inv(twisted.chern()) * ring_pow(ring.zeta(), ring.rank() - 1) * ring_inv(f.chern()) * top_chern(f);
  return pb_pushforward(ring, kernel * milnor_of_tilde);
}

CycleClass milnor_general(const GeneralCaseInput& inp) {
  return milnor_general(ProjBundleRing(inp.e), inp.milnor_of_tilde);
}

Verdict lemma1_pullback_check(const ProjBundleRing& ring, const std::vector<CycleClass>& alphas,
                              const Pushforward& push) {
  Verdict v{"projection of z^{r-1} p^*(alpha)", true, {}};
  const CycleClass zr = ring_pow(ring.zeta(), ring.rank() - 1);
  for (const auto& a : alphas) {
    const CycleClass back = push(ring, zr * ring.pullback(a));
    if (!(back == a)) {
      v.pass = false;
      v.detail = "alpha = " + a.str() + " came back as " + back.str();
      break;
    }
  }
  return v;
}

bool projection_formula_holds(const ProjBundleRing& ring, const CycleClass& alpha, const CycleClass& beta) {
  return pb_pushforward(ring, ring.pullback(alpha) * beta) == alpha * pb_pushforward(ring, beta);
}

}  // namespace milnor
