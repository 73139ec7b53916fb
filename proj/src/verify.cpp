#include "milnor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "milnor/fixtures.hpp"
#include "milnor/intersect.hpp"
#include "milnor/projbundle.hpp"

namespace milnor {

bool SuiteResult::pass() const {
  for (const auto& p : properties)
    if (!p.pass()) return false;
  return !properties.empty();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring", "bundle", "classes", "lecycles", "intersect", "projbundle"};
  return names;
}

namespace {

using Rng = std::mt19937_64;
using Check = std::function<std::optional<std::string>(Rng&)>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) : name_(std::move(name)), rng_(seed) {}

  void property(const std::string& name, int cases, const Check& check) {
    PropertyResult r;
    r.name = name_ + "/" + name;
    for (int i = 0; i < cases; ++i) {
      std::optional<std::string> failure;
      try {
        failure = check(rng_);
      } catch (const std::exception& e) {
        failure = std::string("threw: ") + e.what();
      }
      ++r.cases;
      if (failure) {
        if (r.failures == 0) r.first_failure = "case " + std::to_string(i) + ": " + *failure;
        ++r.failures;
      }
    }
    result_.properties.push_back(std::move(r));
  }

  SuiteResult finish(double ms) {
    result_.suite = name_;
    result_.elapsed_ms = ms;
    return std::move(result_);
  }

 private:
  std::string name_;
  Rng rng_;
  SuiteResult result_;
};

std::optional<std::string> mismatch(const CycleClass& got, const CycleClass& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.str() + ", want " + want.str();
}

// ---- random data ----------------------------------------------------------

AmbientPtr random_base(Rng& rng) {
  switch (uniform(rng, 0, 6)) {
    case 0: return AmbientSpace::multi_proj({1, 1});
    case 1: return AmbientSpace::multi_proj({2, 1});
    case 2: return AmbientSpace::multi_proj({1, 1, 1});
    default: return AmbientSpace::proj_space(uniform(rng, 1, 4));
  }
}

CycleClass random_homogeneous(Rng& rng, const AmbientPtr& amb, int codim, int bound = 4) {
  Coeffs c;
  for (const auto& m : basis_monomials(amb))
    if (codimension(m) == codim && coin(rng)) c[m] = uniform(rng, -bound, bound);
  return CycleClass(amb, c);
}

CycleClass random_class(Rng& rng, const AmbientPtr& amb, int bound = 4) {
  Coeffs c;
  for (const auto& m : basis_monomials(amb))
    if (coin(rng)) c[m] = uniform(rng, -bound, bound);
  return CycleClass(amb, c);
}

/// A class with degree-0 part +1 or -1.
CycleClass random_unit(Rng& rng, const AmbientPtr& amb) {
  CycleClass a = random_class(rng, amb);
  a -= component(a, 0);
  return a + CycleClass::constant(amb, coin(rng) ? 1 : -1);
}

BundleClass random_bundle(Rng& rng, const AmbientPtr& amb, int rank) {
  CycleClass c = CycleClass::one(amb);
  for (int k = 1; k <= std::min(rank, amb->dimension()); ++k) c += random_homogeneous(rng, amb, k, 3);
  return BundleClass(rank, c);
}

std::vector<int> random_multidegree(Rng& rng, const AmbientPtr& amb, int lo, int hi) {
  std::vector<int> d;
  for (int i = 0; i < amb->num_generators(); ++i) d.push_back(uniform(rng, lo, hi));
  return d;
}

BundleClass random_line(Rng& rng, const AmbientPtr& amb) {
  if (amb->kind() == AmbientSpace::Kind::ProjBundle) return line_bundle_from_c1(random_homogeneous(rng, amb, 1, 3));
  return line_bundle(amb, random_multidegree(rng, amb, -3, 3));
}

AmbientPtr random_projbundle(Rng& rng, int max_rank = 3) {
  const AmbientPtr base = coin(rng) ? AmbientSpace::proj_space(uniform(rng, 1, 2)) : random_base(rng);
  const BundleClass e = random_bundle(rng, base, uniform(rng, 1, max_rank));
  return AmbientSpace::proj_bundle(base, e.rank(), e.chern());
}

AmbientPtr random_any(Rng& rng) { return uniform(rng, 0, 3) == 0 ? random_projbundle(rng) : random_base(rng); }

/// Singular strata drawn from the builtin closures: points anywhere, and in
/// P^3 a line with points possibly lying on it.
StratifiedHypersurface random_hypersurface(Rng& rng, const AmbientPtr& amb, int max_points = 2) {
  const int n = amb->dimension();
  std::vector<Stratum> strata;
  Stratum open;
  open.name = "regular";
  open.open = true;
  open.closure_class = CycleClass::zero(amb);
  strata.push_back(open);
  const bool line = n >= 3 && uniform(rng, 0, 2) == 0;
  if (line) strata.push_back(linear_stratum(amb, "line", 1, uniform(rng, -2, 2)));
  const int points = uniform(rng, 0, max_points);
  for (int i = 0; i < points; ++i) {
    std::set<std::string> in;
    if (line && coin(rng)) in.insert("line");
    strata.push_back(point_stratum(amb, "p" + std::to_string(i), uniform(rng, -3, 3), in));
  }
  return StratifiedHypersurface(line_bundle(amb, {uniform(rng, 1, 3)}), strata);
}

StratifiedHypersurface smooth_hypersurface(const AmbientPtr& amb, int degree) {
  Stratum open;
  open.name = "regular";
  open.open = true;
  open.closure_class = CycleClass::zero(amb);
  return StratifiedHypersurface(line_bundle(amb, {degree}), {open});
}

/// k ordinary double points: Milnor fibre a bouquet of one (n-2)-sphere.
StratifiedHypersurface a1_hypersurface(const AmbientPtr& amb, int degree, int k) {
  const int n = amb->dimension();
  Stratum open;
  open.name = "regular";
  open.open = true;
  open.closure_class = CycleClass::zero(amb);
  std::vector<Stratum> strata{open};
  for (int i = 0; i < k; ++i) strata.push_back(point_stratum(amb, "a" + std::to_string(i), 1 + ((n % 2 == 0) ? -1 : 1)));
  return StratifiedHypersurface(line_bundle(amb, {degree}), strata);
}

IntersectionScenario random_intersection(Rng& rng, int min_r = 2, int max_r = 3, bool smooth = false) {
  const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 3));
  const int r = uniform(rng, min_r, max_r);
  std::vector<HypersurfaceData> hyps;
  for (int i = 0; i < r; ++i) {
    const std::string name = "X" + std::to_string(i + 1);
    hyps.push_back(HypersurfaceData::from_strata(
        name, smooth ? smooth_hypersurface(amb, uniform(rng, 1, 3)) : random_hypersurface(rng, amb)));
  }
  return IntersectionScenario(std::move(hyps));
}

// ---- formal-root oracle for twisting ---------------------------------------

using Poly = std::map<std::vector<int>, Integer>;

Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      int deg = 0;
      for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] = ma[i] + mb[i];
      if (deg > max_degree) continue;
      Integer& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  return out;
}

/// c(E (x) L) by expanding prod (1 + x_i + l) over formal roots x_i and
/// rewriting every l-graded piece in elementary symmetric polynomials.
CycleClass twist_by_roots(const BundleClass& e, const BundleClass& l) {
  const AmbientPtr& amb = e.ambient();
  const int r = e.rank(), top = amb->dimension();
  if (r == 0) return CycleClass::one(amb);
  // Variables x_1..x_r, then l.
  Poly prod{{std::vector<int>(r + 1, 0), 1}};
  for (int i = 0; i < r; ++i) {
    Poly factor{{std::vector<int>(r + 1, 0), 1}};
    std::vector<int> xi(r + 1, 0), ll(r + 1, 0);
    xi[i] = 1;
    ll[r] = 1;
    factor[xi] = 1;
    factor[ll] = 1;
    prod = poly_mul(prod, factor, top);
  }
  std::vector<Poly> elem(r + 1);
  for (int k = 0; k <= r; ++k) {
    std::vector<int> mask(r, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    std::sort(mask.begin(), mask.end());
    do {
      std::vector<int> m(mask);
      m.push_back(0);
      elem[k][m] = 1;
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  const CycleClass c1l = l.chern_k(1);
  CycleClass out(amb);
  std::map<int, Poly> by_l;
  for (const auto& [m, c] : prod) {
    std::vector<int> x(m.begin(), m.end() - 1);
    x.push_back(0);
    by_l[m.back()][x] = c;
  }
  for (auto& [q, sym] : by_l) {
    while (!sym.empty()) {
      const auto lead = *sym.rbegin();
      const std::vector<int>& a = lead.first;
      Poly term{{std::vector<int>(r + 1, 0), lead.second}};
      CycleClass cls = CycleClass::constant(amb, lead.second);
      for (int k = 1; k <= r; ++k) {
        const int p = a[k - 1] - (k < r ? a[k] : 0);
        for (int t = 0; t < p; ++t) {
          term = poly_mul(term, elem[k], top);
          cls *= e.chern_k(k);
        }
      }
      for (const auto& [m, c] : term) {
        Integer& slot = sym[m];
        slot -= c;
        if (slot == 0) sym.erase(m);
      }
      out += cls * ring_pow(c1l, q);
    }
  }
  return out;
}

// ---- suites ---------------------------------------------------------------

SuiteResult ring_suite(std::uint64_t seed) {
  Suite s("ring", seed);
  const int N = 120;
  s.property("associativity", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb), b = random_class(rng, amb), c = random_class(rng, amb);
    if (auto m = mismatch((a * b) * c, a * (b * c), "(ab)c vs a(bc)")) return m;
    return mismatch((a + b) + c, a + (b + c), "(a+b)+c vs a+(b+c)");
  });
  s.property("commutativity", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb), b = random_class(rng, amb);
    if (auto m = mismatch(a * b, b * a, "ab vs ba")) return m;
    return mismatch(a + b, b + a, "a+b vs b+a");
  });
  s.property("distributivity", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb), b = random_class(rng, amb), c = random_class(rng, amb);
    return mismatch(a * (b + c), a * b + a * c, "a(b+c)");
  });
  s.property("unit and zero", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb);
    if (auto m = mismatch(CycleClass::one(amb) * a, a, "1a")) return m;
    if (auto m = mismatch(a + CycleClass::zero(amb), a, "a+0")) return m;
    return mismatch(a - a, CycleClass::zero(amb), "a-a");
  });
  s.property("inverse of units", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass u = random_unit(rng, amb);
    if (auto m = mismatch(u * ring_inv(u), CycleClass::one(amb), "u u^-1")) return m;
    const int k = uniform(rng, 1, 4);
    return mismatch(ring_ipow(u, -k) * ring_ipow(u, k), CycleClass::one(amb), "u^-k u^k");
  });
  s.property("degree additive, zero off the top", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb), b = random_class(rng, amb);
    if (degree(a + b) != degree(a) + degree(b)) return "deg(a+b) != deg a + deg b for " + a.str() + ", " + b.str();
    const CycleClass low = a - component(a, amb->dimension());
    if (degree(low) != 0) return "degree of " + low.str() + " is not 0";
    return std::nullopt;
  });
  s.property("grading of products", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb), b = random_class(rng, amb);
    const CycleClass ab = a * b;
    for (int k = 0; k <= amb->dimension(); ++k) {
      CycleClass sum(amb);
      for (int i = 0; i <= k; ++i) sum += component(a, i) * component(b, k - i);
      if (auto m = mismatch(component(ab, k), sum, "codim " + std::to_string(k))) return m;
    }
    return std::nullopt;
  });
  s.property("render/parse round trip", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const CycleClass a = random_class(rng, amb, 50);
    return mismatch(parse_class(amb, a.str()), a, "reparse of " + a.str());
  });
  return s.finish(0);
}

SuiteResult bundle_suite(std::uint64_t seed) {
  Suite s("bundle", seed);
  const int N = 120;
  s.property("Whitney sum formula", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const BundleClass e = random_bundle(rng, amb, uniform(rng, 0, 4)), f = random_bundle(rng, amb, uniform(rng, 0, 4));
    const BundleClass sum = direct_sum(e, f);
    if (sum.rank() != e.rank() + f.rank()) return std::string("rank is not additive");
    return mismatch(sum.chern(), e.chern() * f.chern(), "c(E+F)");
  });
  s.property("dual is an involution", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const BundleClass e = random_bundle(rng, amb, uniform(rng, 0, 4));
    if (!(dual(dual(e)) == e)) return "dual(dual(E)) != E for c(E) = " + e.chern().str();
    return mismatch(dual(e).chern_k(1), -e.chern_k(1), "c1(E^vee)");
  });
  s.property("twist by O(0) is the identity", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const BundleClass e = random_bundle(rng, amb, uniform(rng, 0, 4));
    const BundleClass t = tensor_line(e, line_bundle_from_c1(CycleClass::zero(amb)));
    return mismatch(t.chern(), e.chern(), "c(E (x) O)");
  });
  s.property("c1 of a twist", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const BundleClass e = random_bundle(rng, amb, uniform(rng, 0, 4));
    const BundleClass l = random_line(rng, amb);
    return mismatch(tensor_line(e, l).chern_k(1), e.chern_k(1) + Integer(e.rank()) * l.chern_k(1), "c1(E (x) L)");
  });
  s.property("twist agrees with the formal-root oracle", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_base(rng);
    const int rank = uniform(rng, 1, 4);
    BundleClass e = random_bundle(rng, amb, rank);
    if (coin(rng)) {
      e = trivial_bundle(amb, 0);
      for (int i = 0; i < rank; ++i) e = direct_sum(e, line_bundle(amb, random_multidegree(rng, amb, -3, 3)));
    }
    const BundleClass l = random_line(rng, amb);
    return mismatch(tensor_line(e, l).chern(), twist_by_roots(e, l), "c(E (x) L), rank " + std::to_string(rank));
  });
  s.property("twists compose", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_any(rng);
    const BundleClass e = random_bundle(rng, amb, uniform(rng, 0, 4));
    const BundleClass l = random_line(rng, amb), m = random_line(rng, amb);
    const BundleClass lm = line_bundle_from_c1(l.chern_k(1) + m.chern_k(1));
    return mismatch(tensor_line(tensor_line(e, l), m).chern(), tensor_line(e, lm).chern(), "(E (x) L) (x) M");
  });
  s.property("Bezout: top Chern class of a split bundle", N, [](Rng& rng) -> std::optional<std::string> {
    const int n = uniform(rng, 1, 4);
    const AmbientPtr amb = AmbientSpace::proj_space(n);
    BundleClass e = trivial_bundle(amb, 0);
    Integer product = 1;
    for (int i = 0; i < n; ++i) {
      const int d = uniform(rng, 1, 5);
      product *= d;
      e = direct_sum(e, line_bundle(amb, {d}));
    }
    const Integer got = degree(top_chern(e));
    if (got != product) return "degree " + got.get_str() + ", want " + product.get_str();
    return std::nullopt;
  });
  return s.finish(0);
}

SuiteResult classes_suite(std::uint64_t seed) {
  Suite s("classes", seed);
  const int N = 120;
  s.property("gamma vanishes on the open stratum and on smooth hypersurfaces", N,
             [](Rng& rng) -> std::optional<std::string> {
               const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 4));
               const StratifiedHypersurface hyp = random_hypersurface(rng, amb);
               if (gamma_weights(hyp).at("regular") != 0) return std::string("gamma(open) != 0");
               const StratifiedHypersurface smooth = smooth_hypersurface(amb, uniform(rng, 1, 5));
               for (const auto& [name, g] : gamma_weights(smooth))
                 if (g != 0) return "smooth: gamma(" + name + ") = " + std::to_string(g);
               if (!milnor_pp(smooth).is_zero()) return "smooth: milnor_pp = " + milnor_pp(smooth).str();
               const CycleClass al = aluffi_milnor(smooth.line_bundle(), mu_class(smooth.line_bundle(),
                                                                                  CycleClass::zero(amb)));
               if (!al.is_zero()) return "smooth: aluffi_milnor = " + al.str();
               return std::nullopt;
             });
  s.property("mu is recovered from gamma", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 4));
    const StratifiedHypersurface hyp = random_hypersurface(rng, amb);
    const auto gamma = gamma_weights(hyp);
    for (const auto& st : hyp.strata()) {
      std::int64_t sum = gamma.at(st.name);
      for (const auto& above : st.contained_in) sum += gamma.at(above);
      if (sum != mu_weight(st, hyp)) return "stratum " + st.name + ": sum of gamma " + std::to_string(sum);
    }
    return std::nullopt;
  });
  s.property("degree of c^Vir is chi of the smooth hypersurface", N, [](Rng& rng) -> std::optional<std::string> {
    const int n = uniform(rng, 1, 4), d = uniform(rng, 1, 7);
    const AmbientPtr amb = AmbientSpace::proj_space(n);
    const BundleClass l = line_bundle(amb, {d});
    const Integer got = degree(virtual_class(amb, l, l.chern_k(1)));
    // chi = ((1-d)^{n+1} - 1)/d + n + 1.
    Integer pw = 1;
    for (int i = 0; i <= n; ++i) pw *= 1 - d;
    const Integer want = (pw - 1) / d + n + 1;
    if (got != want) return "P^" + std::to_string(n) + ", d = " + std::to_string(d) + ": " + got.get_str();
    return std::nullopt;
  });
  s.property("definition identity", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 4));
    const StratifiedHypersurface hyp = random_hypersurface(rng, amb);
    const ClassBundle3 c = hypersurface_classes(hyp);
    const int n = amb->dimension();
    if (auto m = mismatch(c.milnor, milnor_pp(hyp), "milnor")) return m;
    return mismatch(milnor_from_definition(c.virt, c.csm, n, 1), c.milnor, "(-1)^{n-1}(virt - csm)");
  });
  s.property("k-nodal plane curves against the chi oracle", N, [](Rng& rng) -> std::optional<std::string> {
    const int d = uniform(rng, 2, 8), k = uniform(rng, 0, 4);
    const Fixture f = k_nodal_curve(d, k);
    const ScenarioReport rep = run_fixture(f, {FormulaSelection::all(), false});
    for (const auto& v : rep.verdicts)
      if (!v.pass) return f.name + ": " + v.name + " " + v.detail;
    return std::nullopt;
  });
  s.property("Aluffi dual and twist identities", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_base(rng);
    const CycleClass a = random_class(rng, amb);
    const BundleClass l = random_line(rng, amb);
    if (auto m = mismatch(aluffi_dual(aluffi_dual(a)), a, "dual twice")) return m;
    if (auto m = mismatch(aluffi_tensor(a, line_bundle_from_c1(CycleClass::zero(amb))), a, "twist by O")) return m;
    return mismatch(aluffi_tensor(aluffi_tensor(a, l), dual(l)), a, "twist by L then L^vee");
  });
  s.property("isolated singularities: degree is the sum of Milnor numbers", N,
             [](Rng& rng) -> std::optional<std::string> {
               const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 4));
               const StratifiedHypersurface hyp = random_hypersurface(rng, amb, 4);
               bool isolated = true;
               Integer sum = 0;
               for (const auto& st : hyp.strata()) {
                 if (st.open) continue;
                 isolated = isolated && st.dim == 0;
                 sum += static_cast<long>(mu_weight(st, hyp));
               }
               if (!isolated) return std::nullopt;
               const Integer got = degree(milnor_pp(hyp));
               if (got != sum) return "degree " + got.get_str() + ", sum " + sum.get_str();
               return std::nullopt;
             });
  s.property("Aluffi route equals the stratified route at ordinary double points", N,
             [](Rng& rng) -> std::optional<std::string> {
               const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 4));
               const int k = uniform(rng, 0, 4);
               const StratifiedHypersurface hyp = a1_hypersurface(amb, uniform(rng, 2, 5), k);
               const CycleClass al =
                   aluffi_milnor(hyp, mu_class(hyp, segre_builtin(amb, SegreCenter::points(k))));
               return mismatch(al, milnor_pp(hyp), "k = " + std::to_string(k));
             });
  s.property("every shipped fixture validates", static_cast<int>(list_fixtures().size()),
             [names = list_fixtures(), i = std::size_t{0}](Rng&) mutable -> std::optional<std::string> {
               const std::string name = names.at(i++);
               const ScenarioReport rep = run_fixture(load_fixture(name), {FormulaSelection::all(), false});
               for (const auto& v : rep.verdicts)
                 if (!v.pass) return name + ": " + v.name + " " + v.detail;
               if (!rep.all_pass()) return name + ": formulas disagree";
               return std::nullopt;
             });
  s.property("negative control: corrupted gamma is detected", 1, [](Rng&) -> std::optional<std::string> {
    const ScenarioReport rep = run_fixture(corrupted_gamma_fixture(), {FormulaSelection::all(), false});
    if (rep.all_pass()) return std::string("the corrupted fixture passed every check");
    return std::nullopt;
  });
  return s.finish(0);
}

SuiteResult lecycles_suite(std::uint64_t seed) {
  Suite s("lecycles", seed);
  const int N = 120;
  auto random_le = [](Rng& rng, const AmbientPtr& amb) {
    LeCycles le{amb, {}};
    const int n = amb->dimension();
    for (int k = 0; k < n; ++k) {
      if (!coin(rng)) continue;
      CycleClass c = random_homogeneous(rng, amb, n - k, 6);
      if (!c.is_zero()) le.classes.emplace(k, c);
    }
    return le;
  };
  s.property("milnor_to_le after le_to_milnor", N, [&](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_base(rng);
    const LeCycles le = random_le(rng, amb);
    const BundleClass l = random_line(rng, amb);
    const LeCycles back = milnor_to_le(le_to_milnor(le, l), l);
    if (back.classes != le.classes) return std::string("Le cycles changed in a round trip");
    return std::nullopt;
  });
  s.property("le_to_milnor after milnor_to_le", N, [&](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_base(rng);
    const GradedClasses m = random_le(rng, amb).classes;
    const BundleClass l = random_line(rng, amb);
    if (le_to_milnor(milnor_to_le(m, l), l) != m) return std::string("Milnor pieces changed in a round trip");
    return std::nullopt;
  });
  s.property("isolated singularities: Lambda_0 = M_0", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 1, 4));
    const CycleClass m0 = Integer(uniform(rng, -5, 5)) * CycleClass::point(amb);
    const LeCycles le = milnor_to_le(split_by_dimension(m0), line_bundle(amb, {uniform(rng, 1, 5)}));
    for (const auto& [k, c] : le.classes)
      if (k != 0) return "Lambda_" + std::to_string(k) + " = " + c.str();
    return mismatch(le.at(0), m0, "Lambda_0");
  });
  s.property("Le formula equals the virtual/CSM product formula", N, [](Rng& rng) -> std::optional<std::string> {
    const IntersectionScenario sc = random_intersection(rng);
    return mismatch(milnor_le_formula(sc), milnor_cor11(sc), "leformula vs cor11");
  });
  return s.finish(0);
}

SuiteResult intersect_suite(std::uint64_t seed) {
  Suite s("intersect", seed);
  s.property("all intersection formulas agree", 240, [](Rng& rng) -> std::optional<std::string> {
    const IntersectionScenario sc = random_intersection(rng);
    const CycleClass t = milnor_thm41(sc);
    if (auto m = mismatch(milnor_cor11(sc), t, "cor11 vs thm41")) return m;
    if (auto m = mismatch(milnor_cor12(sc), t, "cor12 vs thm41")) return m;
    if (auto m = mismatch(milnor_pp_type(sc, PPMode::FullExpansion), t, "pp_full vs thm41")) return m;
    return mismatch(milnor_pp_type(sc, PPMode::PerStratumAis), t, "pp_ais vs thm41");
  });
  s.property("smooth intersections have no Milnor class", 120, [](Rng& rng) -> std::optional<std::string> {
    const IntersectionScenario sc = random_intersection(rng, 2, 3, true);
    for (const auto& [name, c] : std::vector<std::pair<std::string, CycleClass>>{
             {"thm41", milnor_thm41(sc)},
             {"cor11", milnor_cor11(sc)},
             {"cor12", milnor_cor12(sc)},
             {"pp_full", milnor_pp_type(sc, PPMode::FullExpansion)}})
      if (!c.is_zero()) return name + " = " + c.str();
    return std::nullopt;
  });
  s.property("two-factor sign pattern", 120, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 6));
    const int n = amb->dimension();
    std::vector<HypersurfaceData> hyps;
    for (int i = 0; i < 2; ++i)
      hyps.push_back(HypersurfaceData::from_strata("X" + std::to_string(i), smooth_hypersurface(amb, uniform(rng, 1, 3))));
    const IntersectionScenario sc(std::move(hyps));
    // (-1)^n M1 M2 + (-1)^{d1} c^SM_1 M2 + (-1)^{d2} M1 c^SM_2 with d_i = 1.
    const std::map<std::vector<int>, int> want{{{0, 0}, n % 2 == 0 ? 1 : -1}, {{1, 0}, -1}, {{0, 1}, -1}};
    const auto terms = thm41_terms(sc);
    if (terms.size() != want.size()) return "got " + std::to_string(terms.size()) + " terms";
    for (const auto& t : terms) {
      auto it = want.find(t.selector.eps);
      if (it == want.end() || it->second != t.sign)
        return "n = " + std::to_string(n) + ": wrong sign for eps = (" + std::to_string(t.selector.eps[0]) + "," +
               std::to_string(t.selector.eps[1]) + ")";
    }
    return std::nullopt;
  });
  s.property("isolated singular points give classes of points", 120, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = AmbientSpace::proj_space(uniform(rng, 2, 3));
    const int r = uniform(rng, 2, 3);
    std::vector<HypersurfaceData> hyps;
    for (int i = 0; i < r; ++i) {
      std::vector<Stratum> strata;
      Stratum open;
      open.name = "regular";
      open.open = true;
      open.closure_class = CycleClass::zero(amb);
      strata.push_back(open);
      for (int p = uniform(rng, 0, 2); p > 0; --p)
        strata.push_back(point_stratum(amb, "p" + std::to_string(p), uniform(rng, -3, 3)));
      hyps.push_back(HypersurfaceData::from_strata(
          "X" + std::to_string(i), StratifiedHypersurface(line_bundle(amb, {uniform(rng, 1, 3)}), strata)));
    }
    const IntersectionScenario sc(std::move(hyps));
    const CycleClass m = milnor_thm41(sc);
    for (int k : m.codimensions())
      if (k < amb->dimension()) return "support in codimension " + std::to_string(k) + ": " + m.str();
    return std::nullopt;
  });
  s.property("order of the hypersurfaces does not matter", 120, [](Rng& rng) -> std::optional<std::string> {
    const IntersectionScenario sc = random_intersection(rng);
    std::vector<HypersurfaceData> rev(sc.hyps().rbegin(), sc.hyps().rend());
    const IntersectionScenario back(std::move(rev));
    return mismatch(milnor_cor11(back), milnor_cor11(sc), "reversed cor11");
  });
  return s.finish(0);
}

SuiteResult projbundle_suite(std::uint64_t seed) {
  Suite s("projbundle", seed);
  const int N = 120;
  s.property("normal form is independent of association order", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr amb = random_projbundle(rng);
    const int len = uniform(rng, 1, 6);
    std::vector<CycleClass> gens;
    Monomial total(amb->num_generators(), 0);
    for (int i = 0; i < len; ++i) {
      const int g = uniform(rng, 0, amb->num_generators() - 1);
      gens.push_back(CycleClass::generator(amb, g));
      ++total[g];
    }
    CycleClass left = CycleClass::one(amb), right = CycleClass::one(amb);
    for (const auto& g : gens) left = left * g;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) right = *it * right;
    if (left.coeffs() != right.coeffs()) return "left fold " + left.str() + ", right fold " + right.str();
    const CycleClass direct(amb, amb->reduce_monomial(total));
    if (direct.coeffs() != left.coeffs()) return "direct reduction " + direct.str() + ", fold " + left.str();
    return std::nullopt;
  });
  s.property("Grothendieck relation holds", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr base = AmbientSpace::proj_space(uniform(rng, 1, 2));
    const ProjBundleRing ring(random_bundle(rng, base, uniform(rng, 1, 3)));
    const CycleClass defect = grothendieck_defect(ring);
    if (!defect.is_zero()) return "defect " + defect.str();
    return std::nullopt;
  });
  s.property("projection formula", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr base = random_base(rng);
    const ProjBundleRing ring(random_bundle(rng, base, uniform(rng, 1, 3)));
    const CycleClass a = random_class(rng, base), b = random_class(rng, ring.total());
    if (!projection_formula_holds(ring, a, b)) return "alpha = " + a.str() + ", beta = " + b.str();
    return std::nullopt;
  });
  s.property("tangent identities", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr base = AmbientSpace::proj_space(uniform(rng, 1, 3));
    const int r = uniform(rng, 1, 3);
    std::vector<std::vector<int>> split;
    for (int i = 0; i < r; ++i) split.push_back({uniform(rng, -3, 3)});
    const Verdict v = verify_tangent_identities(ProjBundleRing(split_bundle(base, split)), split);
    if (!v.pass) return v.detail;
    const Verdict w = verify_tangent_identities(ProjBundleRing(random_bundle(rng, random_base(rng), r)));
    if (!w.pass) return "non-split: " + w.detail;
    return std::nullopt;
  });
  s.property("Lemma 2 transfer on a grid of twists", 36, [a = -2, b = -2](Rng&) mutable -> std::optional<std::string> {
    const int ca = a, cb = b;
    if (++b > 3) {
      b = -2;
      ++a;
    }
    const AmbientPtr p2 = AmbientSpace::proj_space(2);
    const BundleClass la = line_bundle(p2, {ca}), lb = line_bundle(p2, {cb});
    const BundleClass g = direct_sum(la, lb);
    const CycleClass direct = virtual_class(p2, g, top_chern(g));
    const CycleClass transferred = lemma2_transfer(la, virtual_class(p2, lb, lb.chern_k(1)));
    return mismatch(transferred, direct, "(a, b) = (" + std::to_string(ca) + ", " + std::to_string(cb) + ")");
  });
  s.property("rank one returns its input", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr base = random_base(rng);
    const ProjBundleRing ring(random_bundle(rng, base, 1));
    const CycleClass m = random_class(rng, ring.total());
    return mismatch(ring.pullback(milnor_general(ring, m)), m, "r = 1");
  });
  s.property("pushforward inverts z^{r-1} p^*", N, [](Rng& rng) -> std::optional<std::string> {
    const AmbientPtr base = random_base(rng);
    const ProjBundleRing ring(random_bundle(rng, base, uniform(rng, 1, 3)));
    std::vector<CycleClass> alphas{CycleClass::one(base)};
    for (int i = 0; i < 3; ++i) alphas.push_back(random_class(rng, base));
    const Verdict v = lemma1_pullback_check(ring, alphas);
    if (!v.pass) return v.detail;
    return std::nullopt;
  });
  s.property("negative control: a shifted pushforward is detected", 1, [](Rng&) -> std::optional<std::string> {
    const AmbientPtr base = AmbientSpace::proj_space(2);
    const ProjBundleRing ring(split_bundle(base, {{1}, {2}}));
    const Pushforward shifted = [](const ProjBundleRing& rg, const CycleClass& a) {
      Coeffs out;
      for (const auto& [m, c] : a.coeffs())
        if (m.back() == 0) out.emplace(Monomial(m.begin(), m.end() - 1), c);
      return CycleClass(rg.base(), out);
    };
    if (lemma1_pullback_check(ring, {CycleClass::one(base)}, shifted).pass)
      return std::string("the shifted pushforward passed");
    return std::nullopt;
  });
  s.property("negative control: a sign-flipped relation is detected", 1, [](Rng&) -> std::optional<std::string> {
    if (sign_flipped_relation_check().pass) return std::string("the broken ring passed");
    return std::nullopt;
  });
  return s.finish(0);
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& suite, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> table{
      {"ring", ring_suite},         {"bundle", bundle_suite},       {"classes", classes_suite},
      {"lecycles", lecycles_suite}, {"intersect", intersect_suite}, {"projbundle", projbundle_suite}};
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (table.count(suite)) {
    names.push_back(suite);
  } else {
    throw Error("unknown suite '" + suite + "' (expected ring|bundle|classes|lecycles|intersect|projbundle|all)");
  }
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    // Each suite draws from its own stream so suites are reproducible in isolation.
    const auto& all = suite_names();
    const auto index = static_cast<std::uint64_t>(std::find(all.begin(), all.end(), names[i]) - all.begin());
    SuiteResult r = table.at(names[i])(seed * 1000003ULL + index);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_suites(const std::vector<SuiteResult>& results, bool with_timing) {
  std::ostringstream os;
  double total_ms = 0;
  int props = 0, failed = 0;
  for (const auto& s : results) {
    os << "suite " << s.suite << '\n';
    for (const auto& p : s.properties) {
      os << "  [" << (p.pass() ? "PASS" : "FAIL") << "] " << p.name << "  " << p.cases << " cases";
      if (p.failures) os << ", " << p.failures << " failed; " << p.first_failure;
      os << '\n';
      ++props;
      failed += p.pass() ? 0 : 1;
    }
    os << "  " << (s.pass() ? "PASS" : "FAIL");
    if (with_timing) os << "  " << std::fixed << std::setprecision(1) << s.elapsed_ms << " ms";
    os << '\n';
    total_ms += s.elapsed_ms;
  }
  os << (failed ? "FAIL" : "PASS") << ": " << props - failed << "/" << props << " properties";
  if (with_timing) os << ", total " << std::fixed << std::setprecision(1) << total_ms << " ms";
  os << '\n';
  return os.str();
}

}  // namespace milnor
