#include "milnor/strata.hpp"

#include <algorithm>

namespace milnor {

StratifiedHypersurface::StratifiedHypersurface(BundleClass line_bundle, std::vector<Stratum> strata)
    : line_(std::move(line_bundle)), strata_(std::move(strata)), hyp_class_(line_.chern_k(1)) {
  if (line_.rank() != 1) throw Error("hypersurface: bundle is not a line bundle");
  const int n = ambient()->dimension();
  int opens = 0;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    Stratum& s = strata_[i];
    if (!index.emplace(s.name, i).second) throw Error("duplicate stratum name '" + s.name + "'");
    if (s.open) {
      ++opens;
      s.dim = n - 1;
      s.closure_class = hyp_class_;
      if (s.milnor_fiber_chi != 1) throw Error("open stratum '" + s.name + "' must have milnor_fiber_chi = 1");
      if (!s.contained_in.empty()) throw Error("open stratum '" + s.name + "' cannot lie in another closure");
    } else {
      if (s.dim < 0 || s.dim >= n - 1)
        throw Error("stratum '" + s.name + "': dimension " + std::to_string(s.dim) + " out of range");
      if (!s.csm_closure) throw Error("stratum '" + s.name + "': missing c^SM of the closure");
    }
    if (!same_ambient(s.closure_class.ambient(), ambient()))
      throw Error("stratum '" + s.name + "': closure class on the wrong ambient");
    if (s.csm_closure && !same_ambient(s.csm_closure->ambient(), ambient()))
      throw Error("stratum '" + s.name + "': c^SM class on the wrong ambient");
    if (!s.closure_class.is_homogeneous(n - s.dim))
      throw Error("stratum '" + s.name + "': closure class is not of codimension " + std::to_string(n - s.dim));
  }
  if (opens != 1) throw Error("hypersurface must have exactly one open stratum, found " + std::to_string(opens));

  const std::string open_name = open_stratum().name;
  for (auto& s : strata_) {
    for (const auto& c : s.contained_in)
      if (!index.count(c)) throw Error("stratum '" + s.name + "': unknown stratum '" + c + "' in contained_in");
    if (!s.open) s.contained_in.insert(open_name);
  }

  // Transitive closure; strict dimension decrease rules out cycles.
  for (auto& s : strata_) {
    for (const auto& c : s.contained_in) {
      const Stratum& above = strata_[index.at(c)];
      if (above.name == s.name) throw Error("stratum '" + s.name + "' is contained in itself");
      if (above.dim <= s.dim)
        throw Error("inconsistent containment: '" + s.name + "' (dim " + std::to_string(s.dim) + ") in closure of '" +
                    above.name + "' (dim " + std::to_string(above.dim) + ")");
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& s : strata_) {
      std::set<std::string> add;
      for (const auto& c : s.contained_in)
        for (const auto& cc : strata_[index.at(c)].contained_in)
          if (!s.contained_in.count(cc)) add.insert(cc);
      if (add.count(s.name)) throw Error("cyclic containment through stratum '" + s.name + "'");
      if (!add.empty()) {
        s.contained_in.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
}

const Stratum& StratifiedHypersurface::open_stratum() const {
  for (const auto& s : strata_)
    if (s.open) return s;
  throw Error("hypersurface has no open stratum");
}

const Stratum& StratifiedHypersurface::stratum(const std::string& name) const {
  for (const auto& s : strata_)
    if (s.name == name) return s;
  throw Error("unknown stratum '" + name + "'");
}

std::vector<const Stratum*> StratifiedHypersurface::by_descending_dim() const {
  std::vector<const Stratum*> out;
  for (const auto& s : strata_) out.push_back(&s);
  std::stable_sort(out.begin(), out.end(), [](const Stratum* a, const Stratum* b) { return a->dim > b->dim; });
  return out;
}

CycleClass linear_csm(const AmbientPtr& ambient, int m) {
  if (ambient->kind() != AmbientSpace::Kind::ProjSpace) throw Error("linear closures need a projective space");
  const int n = ambient->dimension();
  if (m < 0 || m > n) throw Error("linear(" + std::to_string(m) + ") does not fit in P^" + std::to_string(n));
  CycleClass h = CycleClass::generator(ambient, 0);
  return ring_pow(CycleClass::one(ambient) + h, m + 1) * ring_pow(h, n - m);
}

Stratum point_stratum(const AmbientPtr& ambient, std::string name, std::int64_t milnor_fiber_chi,
                      std::set<std::string> contained_in) {
  Stratum s;
  s.name = std::move(name);
  s.closure_class = CycleClass::point(ambient);
  s.csm_closure = CycleClass::point(ambient);
  s.dim = 0;
  s.milnor_fiber_chi = milnor_fiber_chi;
  s.contained_in = std::move(contained_in);
  return s;
}

Stratum linear_stratum(const AmbientPtr& ambient, std::string name, int m, std::int64_t milnor_fiber_chi,
                       std::set<std::string> contained_in) {
  Stratum s;
  s.name = std::move(name);
  s.closure_class = ring_pow(CycleClass::generator(ambient, 0), ambient->dimension() - m);
  s.csm_closure = linear_csm(ambient, m);
  s.dim = m;
  s.milnor_fiber_chi = milnor_fiber_chi;
  s.contained_in = std::move(contained_in);
  return s;
}

std::int64_t mu_weight(const Stratum& s, const StratifiedHypersurface& hyp) {
  const std::int64_t sign = (hyp.dim() % 2 == 0) ? 1 : -1;
  return sign * (s.milnor_fiber_chi - 1);
}

std::map<std::string, std::int64_t> gamma_weights(const StratifiedHypersurface& hyp) {
  std::map<std::string, std::int64_t> gamma;
  for (const Stratum* s : hyp.by_descending_dim()) {
    std::int64_t g = mu_weight(*s, hyp);
    for (const auto& above : s->contained_in) g -= gamma.at(above);
    gamma[s->name] = g;
  }
  return gamma;
}

std::map<std::string, Integer> open_stratum_chis(const StratifiedHypersurface& hyp) {
  auto order = hyp.by_descending_dim();
  std::reverse(order.begin(), order.end());
  std::map<std::string, Integer> chi;
  for (const Stratum* s : order) {
    if (!s->csm_closure)
      throw Error("stratum '" + s->name + "': Euler characteristic of the closure needs its c^SM class");
    Integer x = degree(*s->csm_closure);
    for (const auto& t : hyp.strata())
      if (t.contained_in.count(s->name)) x -= chi.at(t.name);
    chi[s->name] = x;
  }
  return chi;
}

Integer stratified_chi(const StratifiedHypersurface& hyp, const std::map<std::string, std::int64_t>& weights) {
  for (const auto& [name, w] : weights) hyp.stratum(name);
  Integer total = 0;
  for (const auto& [name, x] : open_stratum_chis(hyp)) {
    auto it = weights.find(name);
    if (it != weights.end()) total += Integer(static_cast<long>(it->second)) * x;
  }
  return total;
}

Integer stratified_chi(const StratifiedHypersurface& hyp) {
  std::map<std::string, std::int64_t> ones;
  for (const auto& s : hyp.strata()) ones[s.name] = 1;
  return stratified_chi(hyp, ones);
}

}  // namespace milnor
