#include "milnor/chow.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace milnor {

namespace {

void accumulate(Coeffs& into, const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

void require_same(const CycleClass& a, const CycleClass& b, const char* op) {
  if (!a.ambient() || !b.ambient()) throw Error(std::string(op) + ": class without ambient");
  if (!same_ambient(a.ambient(), b.ambient())) throw Error(std::string(op) + ": ambient mismatch");
}

}  // namespace

int codimension(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

// ---------------------------------------------------------------------------
// AmbientSpace

AmbientPtr AmbientSpace::proj_space(int n) {
  if (n < 0) throw Error("proj_space: negative dimension " + std::to_string(n));
  auto a = std::shared_ptr<AmbientSpace>(new AmbientSpace());
  a->kind_ = Kind::ProjSpace;
  a->dimension_ = n;
  a->names_ = {"h"};
  a->factor_dims_ = {n};
  return a;
}

AmbientPtr AmbientSpace::multi_proj(std::vector<int> dims) {
  if (dims.empty()) throw Error("multi_proj: no factors");
  auto a = std::shared_ptr<AmbientSpace>(new AmbientSpace());
  a->kind_ = Kind::MultiProj;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) throw Error("multi_proj: negative dimension " + std::to_string(dims[i]));
    a->dimension_ += dims[i];
    a->names_.push_back("h" + std::to_string(i + 1));
  }
  a->factor_dims_ = std::move(dims);
  return a;
}

AmbientPtr AmbientSpace::proj_bundle(AmbientPtr base, int rank, const CycleClass& chern) {
  if (!chern.ambient()) throw Error("proj_bundle: Chern class without ambient");
  std::vector<Coeffs> relation;
  for (int i = 1; i <= rank; ++i) {
    CycleClass ci = i <= chern.ambient()->dimension() ? component(chern, i) : CycleClass::zero(chern.ambient());
    relation.push_back((i % 2 == 1 ? ci : -ci).coeffs());
  }
  return proj_bundle_with_relation(std::move(base), rank, chern, std::move(relation));
}

AmbientPtr AmbientSpace::proj_bundle_with_relation(AmbientPtr base, int rank, const CycleClass& chern,
                                                   std::vector<Coeffs> relation) {
  if (!base) throw Error("proj_bundle: missing base");
  if (rank < 1) throw Error("proj_bundle: rank must be >= 1, got " + std::to_string(rank));
  if (!chern.ambient() || !same_ambient(base, chern.ambient()))
    throw Error("proj_bundle: bundle does not live over the base");
  if (chern.coefficient(Monomial(base->num_generators(), 0)) != 1)
    throw Error("proj_bundle: total Chern class must start with 1");
  for (int k : chern.codimensions())
    if (k > rank) throw Error("proj_bundle: Chern class has terms above the rank");
  if (static_cast<int>(relation.size()) != rank) throw Error("proj_bundle: relation has wrong length");

  auto a = std::shared_ptr<AmbientSpace>(new AmbientSpace());
  a->kind_ = Kind::ProjBundle;
  a->base_ = base;
  a->rank_ = rank;
  a->dimension_ = base->dimension() + rank - 1;
  a->bundle_chern_ = chern.coeffs();
  a->relation_ = std::move(relation);
  a->names_ = base->generator_names();
  int nested = 1;
  for (const auto& n : a->names_)
    if (!n.empty() && n[0] == 'z') ++nested;
  a->names_.push_back(nested == 1 ? "z" : "z" + std::to_string(nested));
  a->build_zeta_powers();
  return a;
}

void AmbientSpace::build_zeta_powers() {
  const int nb = base_->num_generators();
  zeta_powers_.clear();
  Monomial unit(nb + 1, 0);
  zeta_powers_.push_back(Coeffs{{unit, 1}});
  for (int k = 1; k <= dimension_; ++k) {
    Coeffs next;
    for (const auto& [m, c] : zeta_powers_.back()) {
      const int j = m.back();
      if (j + 1 < rank_) {
        Monomial up = m;
        up.back() = j + 1;
        accumulate(next, up, c);
        continue;
      }
      Monomial bm(m.begin(), m.end() - 1);
      for (int i = 1; i <= rank_; ++i) {
        for (const auto& [rm, rc] : relation_[i - 1]) {
          for (const auto& [pm, pc] : base_->multiply_monomials(bm, rm)) {
            Monomial out = pm;
            out.push_back(rank_ - i);
            accumulate(next, out, c * rc * pc);
          }
        }
      }
    }
    zeta_powers_.push_back(std::move(next));
  }
}

Monomial AmbientSpace::top_monomial() const {
  switch (kind_) {
    case Kind::ProjSpace:
    case Kind::MultiProj:
      return factor_dims_;
    case Kind::ProjBundle: {
      Monomial m = base_->top_monomial();
      m.push_back(rank_ - 1);
      return m;
    }
  }
  return {};
}

bool AmbientSpace::is_normal(const Monomial& m) const {
  if (static_cast<int>(m.size()) != num_generators()) return false;
  for (int e : m)
    if (e < 0) return false;
  if (kind_ == Kind::ProjBundle) {
    if (m.back() >= rank_) return false;
    return base_->is_normal(Monomial(m.begin(), m.end() - 1));
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > factor_dims_[i]) return false;
  return true;
}

Coeffs AmbientSpace::reduce_monomial(const Monomial& m) const {
  if (static_cast<int>(m.size()) != num_generators())
    throw Error("monomial has " + std::to_string(m.size()) + " exponents, ambient has " +
                std::to_string(num_generators()) + " generators");
  for (int e : m)
    if (e < 0) throw Error("negative exponent in monomial");
  if (codimension(m) > dimension_) return {};
  if (kind_ != Kind::ProjBundle) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > factor_dims_[i]) return {};
    return Coeffs{{m, 1}};
  }
  Monomial bm(m.begin(), m.end() - 1);
  Coeffs base_part = base_->reduce_monomial(bm);
  Coeffs out;
  for (const auto& [b, bc] : base_part) {
    for (const auto& [t, tc] : zeta_powers_[m.back()]) {
      Monomial tb(t.begin(), t.end() - 1);
      for (const auto& [pm, pc] : base_->multiply_monomials(b, tb)) {
        Monomial r = pm;
        r.push_back(t.back());
        accumulate(out, r, bc * tc * pc);
      }
    }
  }
  return out;
}

Coeffs AmbientSpace::multiply_monomials(const Monomial& a, const Monomial& b) const {
  Monomial s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce_monomial(s);
}

std::string AmbientSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::ProjSpace:
      os << "P^" << dimension_;
      break;
    case Kind::MultiProj:
      for (std::size_t i = 0; i < factor_dims_.size(); ++i) os << (i ? " x " : "") << "P^" << factor_dims_[i];
      break;
    case Kind::ProjBundle:
      os << "P(E^vee) over " << base_->describe() << ", rank " << rank_ << ", c(E) = "
         << CycleClass(base_, bundle_chern_).str();
      break;
  }
  return os.str();
}

bool operator==(const AmbientSpace& a, const AmbientSpace& b) {
  if (a.kind_ != b.kind_ || a.dimension_ != b.dimension_ || a.names_ != b.names_) return false;
  if (a.kind_ != AmbientSpace::Kind::ProjBundle) return a.factor_dims_ == b.factor_dims_;
  return same_ambient(a.base_, b.base_) && a.rank_ == b.rank_ && a.bundle_chern_ == b.bundle_chern_ &&
         a.relation_ == b.relation_;
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// CycleClass

CycleClass::CycleClass(AmbientPtr ambient, const Coeffs& coeffs) : ambient_(std::move(ambient)) {
  if (!ambient_) throw Error("CycleClass: missing ambient");
  for (const auto& [m, c] : coeffs) {
    if (c == 0) continue;
    if (ambient_->is_normal(m)) {
      accumulate(coeffs_, m, c);
      continue;
    }
    for (const auto& [r, rc] : ambient_->reduce_monomial(m)) accumulate(coeffs_, r, c * rc);
  }
}

CycleClass CycleClass::one(AmbientPtr ambient) { return constant(std::move(ambient), 1); }

CycleClass CycleClass::constant(AmbientPtr ambient, const Integer& c) {
  Monomial m(ambient->num_generators(), 0);
  return CycleClass(std::move(ambient), Coeffs{{m, c}});
}

CycleClass CycleClass::generator(AmbientPtr ambient, int index) {
  if (index < 0 || index >= ambient->num_generators()) throw Error("generator index out of range");
  Monomial m(ambient->num_generators(), 0);
  m[index] = 1;
  return CycleClass(std::move(ambient), Coeffs{{m, 1}});
}

CycleClass CycleClass::point(AmbientPtr ambient) {
  Monomial m = ambient->top_monomial();
  return CycleClass(std::move(ambient), Coeffs{{m, 1}});
}

CycleClass CycleClass::monomial(AmbientPtr ambient, const Monomial& m, const Integer& c) {
  return CycleClass(std::move(ambient), Coeffs{{m, c}});
}

Integer CycleClass::coefficient(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::vector<int> CycleClass::codimensions() const {
  std::vector<int> out;
  for (const auto& [m, c] : coeffs_) out.push_back(codimension(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CycleClass::is_homogeneous(int codim) const {
  for (const auto& [m, c] : coeffs_)
    if (codimension(m) != codim) return false;
  return true;
}

std::string CycleClass::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<Monomial, Integer>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int cx = codimension(x.first), cy = codimension(y.first);
    if (cx != cy) return cx > cy;
    return x.first > y.first;
  });
  const auto& names = ambient_->generator_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += names[i];
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (factors.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << factors;
    } else {
      os << mag.get_str() << '*' << factors;
    }
  }
  return os.str();
}

CycleClass& CycleClass::operator+=(const CycleClass& o) {
  require_same(*this, o, "ring_add");
  for (const auto& [m, c] : o.coeffs_) accumulate(coeffs_, m, c);
  return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& o) {
  require_same(*this, o, "ring_add");
  for (const auto& [m, c] : o.coeffs_) accumulate(coeffs_, m, -c);
  return *this;
}

CycleClass& CycleClass::operator*=(const CycleClass& o) { return *this = *this * o; }

CycleClass operator*(const CycleClass& a, const CycleClass& b) {
  require_same(a, b, "ring_mul");
  const AmbientSpace& amb = *a.ambient_;
  CycleClass out(a.ambient_);
  for (const auto& [ma, ca] : a.coeffs_) {
    const int da = codimension(ma);
    for (const auto& [mb, cb] : b.coeffs_) {
      if (da + codimension(mb) > amb.dimension()) continue;
      for (const auto& [m, c] : amb.multiply_monomials(ma, mb)) accumulate(out.coeffs_, m, ca * cb * c);
    }
  }
  return out;
}

CycleClass operator*(const Integer& m, const CycleClass& a) {
  CycleClass out(a.ambient_);
  if (m == 0) return out;
  for (const auto& [mono, c] : a.coeffs_) out.coeffs_.emplace(mono, c * m);
  return out;
}

CycleClass operator-(const CycleClass& a) { return Integer(-1) * a; }

bool operator==(const CycleClass& a, const CycleClass& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Free functions

CycleClass ring_add(const CycleClass& a, const CycleClass& b) { return a + b; }
CycleClass ring_neg(const CycleClass& a) { return -a; }
CycleClass ring_scale(const CycleClass& a, const Integer& m) { return m * a; }
CycleClass ring_mul(const CycleClass& a, const CycleClass& b) { return a * b; }

CycleClass ring_pow(const CycleClass& a, int e) {
  if (e < 0) throw Error("ring_pow: negative exponent");
  CycleClass out = CycleClass::one(a.ambient());
  CycleClass base = a;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

CycleClass ring_inv(const CycleClass& a) {
  const AmbientPtr& amb = a.ambient();
  const Integer u = a.coefficient(Monomial(amb->num_generators(), 0));
  if (u != 1 && u != -1) throw Error("ring_inv: degree-0 part " + u.get_str() + " is not a unit");
  const int n = amb->dimension();
  std::vector<CycleClass> ac, bc;
  for (int k = 0; k <= n; ++k) ac.push_back(component(a, k));
  bc.push_back(CycleClass::constant(amb, u));
  for (int k = 1; k <= n; ++k) {
    CycleClass acc(amb);
    for (int i = 1; i <= k; ++i) acc += ac[i] * bc[k - i];
    bc.push_back(Integer(-u) * acc);
  }
  CycleClass out(amb);
  for (const auto& b : bc) out += b;
  return out;
}

CycleClass ring_ipow(const CycleClass& a, int e) {
  return e >= 0 ? ring_pow(a, e) : ring_pow(ring_inv(a), -e);
}

CycleClass component(const CycleClass& a, int codim) {
  if (codim < 0 || codim > a.ambient()->dimension())
    throw Error("component: codimension " + std::to_string(codim) + " out of range 0.." +
                std::to_string(a.ambient()->dimension()));
  Coeffs out;
  for (const auto& [m, c] : a.coeffs())
    if (codimension(m) == codim) out.emplace(m, c);
  return CycleClass(a.ambient(), out);
}

std::vector<Monomial> basis_monomials(const AmbientPtr& ambient) {
  std::vector<Monomial> out;
  if (ambient->kind() == AmbientSpace::Kind::ProjBundle) {
    for (auto m : basis_monomials(ambient->base()))
      for (int j = 0; j < ambient->bundle_rank(); ++j) {
        Monomial up = m;
        up.push_back(j);
        out.push_back(std::move(up));
      }
  } else {
    const auto& dims = ambient->factor_dims();
    Monomial m(dims.size(), 0);
    while (true) {
      out.push_back(m);
      std::size_t i = 0;
      while (i < m.size() && m[i] == dims[i]) m[i++] = 0;
      if (i == m.size()) break;
      ++m[i];
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Monomial& a, const Monomial& b) { return codimension(a) < codimension(b); });
  return out;
}

Integer degree(const CycleClass& a) { return a.coefficient(a.ambient()->top_monomial()); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ClassParser {
 public:
  ClassParser(const AmbientPtr& amb, std::string_view text) : amb_(amb), s_(text) {}

  CycleClass parse() {
    Coeffs acc;
    skip();
    if (pos_ >= s_.size()) fail("empty class");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      accumulate(acc, m, sign * c);
    }
    return CycleClass(amb_, acc);
  }

 private:
  std::pair<Monomial, Integer> term() {
    Monomial m(amb_->num_generators(), 0);
    Integer coef = 1;
    bool any = false;
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        skip();
      }
      if (pos_ >= s_.size()) break;
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef *= Integer(number());
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string id = ident();
        const auto& names = amb_->generator_names();
        auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end()) fail("unknown generator '" + id + "'");
        int e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = std::stoi(number());
        }
        m[it - names.begin()] += e;
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return {m, coef};
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse class \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  const AmbientPtr& amb_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycleClass parse_class(const AmbientPtr& ambient, std::string_view text) {
  if (!ambient) throw Error("parse_class: missing ambient");
  return ClassParser(ambient, text).parse();
}

}  // namespace milnor
