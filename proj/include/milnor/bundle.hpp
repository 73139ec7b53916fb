#pragma once

#include "milnor/chow.hpp"

namespace milnor {

/// A formal vector bundle: only its rank and total Chern class are tracked.
class BundleClass {
 public:
  /// Validates that chern starts with 1 and vanishes above the rank.
  BundleClass(int rank, CycleClass chern);

  const AmbientPtr& ambient() const { return chern_.ambient(); }
  int rank() const { return rank_; }
  const CycleClass& chern() const { return chern_; }
  /// c_k(E); zero when k exceeds the ambient dimension.
  CycleClass chern_k(int k) const;

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.rank_ == b.rank_ && a.chern_ == b.chern_;
  }

 private:
  int rank_;
  CycleClass chern_;
};

/// O(d_1, ..., d_k) on a projective space or product of projective spaces.
BundleClass line_bundle(const AmbientPtr& ambient, const std::vector<int>& multidegree);
/// A line bundle with the given first Chern class, on any ambient.
BundleClass line_bundle_from_c1(const CycleClass& c1);
BundleClass trivial_bundle(const AmbientPtr& ambient, int rank = 0);

BundleClass direct_sum(const BundleClass& e, const BundleClass& f);
BundleClass dual(const BundleClass& e);
/// E tensor L for a line bundle L:
///   c_k(E (x) L) = sum_{i<=k} C(rank-i, k-i) c_i(E) c_1(L)^{k-i}.
BundleClass tensor_line(const BundleClass& e, const BundleClass& l);
BundleClass tangent_bundle(const AmbientPtr& ambient);
CycleClass top_chern(const BundleClass& e);

Integer binomial(int n, int k);

}  // namespace milnor
