#include <gtest/gtest.h>

#include "milnor/strata.hpp"

using namespace milnor;

namespace {

Stratum open_stratum() {
  Stratum s;
  s.name = "regular";
  s.open = true;
  return s;
}

}  // namespace

TEST(Strata, TwoPlanesWeights) {
  auto p3 = AmbientSpace::proj_space(3);
  StratifiedHypersurface hyp(line_bundle(p3, {2}), {open_stratum(), linear_stratum(p3, "axis", 1, 0)});
  EXPECT_EQ(mu_weight(hyp.stratum("axis"), hyp), -1);
  const auto g = gamma_weights(hyp);
  EXPECT_EQ(g.at("regular"), 0);
  EXPECT_EQ(g.at("axis"), -1);
  EXPECT_TRUE(hyp.stratum("axis").contained_in.count("regular"));
}

TEST(Strata, PointOnASingularLine) {
  // A point stratum lying on the line: its gamma subtracts the line's.
  auto p3 = AmbientSpace::proj_space(3);
  StratifiedHypersurface hyp(line_bundle(p3, {3}),
                             {open_stratum(), linear_stratum(p3, "L", 1, 0), point_stratum(p3, "p", -2, {"L"})});
  const auto g = gamma_weights(hyp);
  EXPECT_EQ(g.at("L"), -1);
  // mu_p = (-1)^2 (-2 - 1) = -3.
  EXPECT_EQ(g.at("p"), -3 - (-1));
}

TEST(Strata, OpenStratumChis) {
  auto p3 = AmbientSpace::proj_space(3);
  Stratum open = open_stratum();
  open.csm_closure = parse_class(p3, "2h + 5h^2 + 4h^3");
  StratifiedHypersurface hyp(line_bundle(p3, {2}), {open, linear_stratum(p3, "axis", 1, 0)});
  const auto chis = open_stratum_chis(hyp);
  EXPECT_EQ(chis.at("axis"), 2);
  EXPECT_EQ(chis.at("regular"), 2);
  EXPECT_EQ(stratified_chi(hyp), 4);
  EXPECT_EQ(stratified_chi(hyp, {{"axis", 1}}), 2);
}

TEST(Strata, MissingCsmIsReported) {
  auto p2 = AmbientSpace::proj_space(2);
  StratifiedHypersurface hyp(line_bundle(p2, {3}), {open_stratum(), point_stratum(p2, "node", 0)});
  EXPECT_THROW(open_stratum_chis(hyp), Error);
}

TEST(Strata, RejectsMalformedIncidences) {
  auto p3 = AmbientSpace::proj_space(3);
  const BundleClass l = line_bundle(p3, {2});
  // Two open strata.
  EXPECT_THROW(StratifiedHypersurface(l, {open_stratum(), open_stratum()}), Error);
  // Unknown containing stratum.
  EXPECT_THROW(StratifiedHypersurface(l, {open_stratum(), point_stratum(p3, "p", 0, {"nowhere"})}), Error);
  // A line inside a point.
  EXPECT_THROW(StratifiedHypersurface(l, {open_stratum(), point_stratum(p3, "p", 0),
                                          linear_stratum(p3, "L", 1, 0, {"p"})}),
               Error);
  // Open stratum with a nontrivial Milnor fibre.
  Stratum bad = open_stratum();
  bad.milnor_fiber_chi = 0;
  EXPECT_THROW(StratifiedHypersurface(l, {bad}), Error);
}

TEST(Strata, LinearCsm) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(linear_csm(p3, 1), parse_class(p3, "h^2 + 2h^3"));
  EXPECT_EQ(linear_csm(p3, 0), CycleClass::point(p3));
  EXPECT_EQ(degree(linear_csm(p3, 2)), 3);
}
