#pragma once

// Truncated graded Chow rings of projective spaces, products of projective
// spaces and projective bundles, with exact integer coefficients.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integer = mpz_class;
using Monomial = std::vector<int>;
using Coeffs = std::map<Monomial, Integer>;

class AmbientSpace;
using AmbientPtr = std::shared_ptr<const AmbientSpace>;

class CycleClass;

/// The ambient manifold M. Immutable once built; always handled through
/// AmbientPtr so that classes can refer to it cheaply.
class AmbientSpace {
 public:
  enum class Kind { ProjSpace, MultiProj, ProjBundle };

  static AmbientPtr proj_space(int n);
  static AmbientPtr multi_proj(std::vector<int> dims);
  /// P(E^vee) over `base` for a bundle of the given rank and total Chern
  /// class. The tautological generator z satisfies
  ///   z^r = c1 z^{r-1} - c2 z^{r-2} + ... + (-1)^{r-1} c_r.
  static AmbientPtr proj_bundle(AmbientPtr base, int rank, const CycleClass& chern);
  /// Same as proj_bundle but with the reduction z^r = sum_i relation[i-1] z^{r-i}
  /// taken verbatim. Only used to build deliberately broken rings.
  static AmbientPtr proj_bundle_with_relation(AmbientPtr base, int rank, const CycleClass& chern,
                                              std::vector<Coeffs> relation);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }

  /// Factor dimensions (ProjSpace, MultiProj).
  const std::vector<int>& factor_dims() const { return factor_dims_; }

  // ProjBundle accessors.
  const AmbientPtr& base() const { return base_; }
  int bundle_rank() const { return rank_; }
  const Coeffs& bundle_chern() const { return bundle_chern_; }
  const std::vector<Coeffs>& relation() const { return relation_; }

  /// Exponent vector of the point class.
  Monomial top_monomial() const;

  /// Product of two normal-form monomials, reduced to normal form.
  Coeffs multiply_monomials(const Monomial& a, const Monomial& b) const;

  /// Reduces an arbitrary exponent vector (any nonnegative exponents).
  Coeffs reduce_monomial(const Monomial& m) const;

  bool is_normal(const Monomial& m) const;

  std::string describe() const;

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b);

 private:
  AmbientSpace() = default;

  void build_zeta_powers();

  Kind kind_ = Kind::ProjSpace;
  int dimension_ = 0;
  std::vector<std::string> names_;
  std::vector<int> factor_dims_;

  AmbientPtr base_;
  int rank_ = 0;
  Coeffs bundle_chern_;
  std::vector<Coeffs> relation_;  // relation_[i-1] multiplies z^{r-i}
  std::vector<Coeffs> zeta_powers_;  // normal forms of z^k, 0 <= k <= dimension
};

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

/// An element of the Chow ring of an ambient, graded by codimension.
class CycleClass {
 public:
  CycleClass() = default;
  explicit CycleClass(AmbientPtr ambient) : ambient_(std::move(ambient)) {}
  /// Reduces `coeffs` to normal form.
  CycleClass(AmbientPtr ambient, const Coeffs& coeffs);

  static CycleClass zero(AmbientPtr ambient) { return CycleClass(std::move(ambient)); }
  static CycleClass one(AmbientPtr ambient);
  static CycleClass constant(AmbientPtr ambient, const Integer& c);
  /// The i-th codimension-one generator.
  static CycleClass generator(AmbientPtr ambient, int index);
  static CycleClass point(AmbientPtr ambient);
  static CycleClass monomial(AmbientPtr ambient, const Monomial& m, const Integer& c = 1);

  const AmbientPtr& ambient() const { return ambient_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of the monomial (normal form) or zero.
  Integer coefficient(const Monomial& m) const;

  /// Codimensions present (ascending).
  std::vector<int> codimensions() const;
  bool is_homogeneous(int codim) const;

  std::string str() const;

  CycleClass& operator+=(const CycleClass& o);
  CycleClass& operator-=(const CycleClass& o);
  CycleClass& operator*=(const CycleClass& o);

  friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
  friend CycleClass operator*(const CycleClass& a, const CycleClass& b);
  friend CycleClass operator*(const Integer& m, const CycleClass& a);
  friend CycleClass operator-(const CycleClass& a);

  friend bool operator==(const CycleClass& a, const CycleClass& b);

 private:
  AmbientPtr ambient_;
  Coeffs coeffs_;
};

int codimension(const Monomial& m);

CycleClass ring_add(const CycleClass& a, const CycleClass& b);
CycleClass ring_neg(const CycleClass& a);
CycleClass ring_scale(const CycleClass& a, const Integer& m);
CycleClass ring_mul(const CycleClass& a, const CycleClass& b);
CycleClass ring_pow(const CycleClass& a, int e);
/// Inverse of a class whose degree-0 part is +1 or -1.
CycleClass ring_inv(const CycleClass& a);
/// a^e for any integer e; negative exponents go through ring_inv.
CycleClass ring_ipow(const CycleClass& a, int e);

CycleClass component(const CycleClass& a, int codim);
/// All normal-form monomials of the ambient, ascending codimension.
std::vector<Monomial> basis_monomials(const AmbientPtr& ambient);
/// Integral over the ambient: coefficient of the point class.
Integer degree(const CycleClass& a);

/// Parses the canonical rendering (and a few looser spellings such as
/// "3h^2" or "1 + 2 h1 h2") back into a class on `ambient`.
CycleClass parse_class(const AmbientPtr& ambient, std::string_view text);

}  // namespace milnor
