#include <gtest/gtest.h>

#include "milnor/intersect.hpp"

using namespace milnor;

namespace {

Stratum open_stratum() {
  Stratum s;
  s.name = "regular";
  s.open = true;
  return s;
}

HypersurfaceData two_planes(const AmbientPtr& p3) {
  return HypersurfaceData::from_strata(
      "P", StratifiedHypersurface(line_bundle(p3, {2}), {open_stratum(), linear_stratum(p3, "axis", 1, 0)}));
}

HypersurfaceData cone(const AmbientPtr& p3) {
  HypersurfaceData h = HypersurfaceData::from_strata(
      "Q", StratifiedHypersurface(line_bundle(p3, {2}), {open_stratum(), point_stratum(p3, "vertex", 2)}));
  h.segre = segre_builtin(p3, SegreCenter::points(1));
  return h;
}

HypersurfaceData plane(const AmbientPtr& p3) {
  HypersurfaceData h =
      HypersurfaceData::from_strata("H", StratifiedHypersurface(line_bundle(p3, {1}), {open_stratum()}));
  h.segre = CycleClass::zero(p3);
  return h;
}

}  // namespace

TEST(Intersect, TwoPlanesCapPlaneAllFormulas) {
  auto p3 = AmbientSpace::proj_space(3);
  HypersurfaceData p = two_planes(p3);
  p.segre = segre_builtin(p3, SegreCenter::linear(1));
  IntersectionScenario sc({p, plane(p3)});
  const CycleClass want = parse_class(p3, "h^3");
  EXPECT_EQ(milnor_thm41(sc), want);
  EXPECT_EQ(milnor_cor11(sc), want);
  EXPECT_EQ(milnor_cor12(sc), want);
  EXPECT_EQ(milnor_pp_type(sc, PPMode::PerStratumAis), want);
  EXPECT_EQ(milnor_pp_type(sc, PPMode::FullExpansion), want);
  EXPECT_EQ(milnor_le_formula(sc), want);
  EXPECT_EQ(milnor_aluffi_cor(sc), want);
  EXPECT_EQ(intersection_virtual(sc), parse_class(p3, "2h^2 + 2h^3"));
  EXPECT_EQ(csm_from_milnor(intersection_virtual(sc), want, 3, 2), parse_class(p3, "2h^2 + 3h^3"));
}

TEST(Intersect, ConeCapPlaneVanishes) {
  auto p3 = AmbientSpace::proj_space(3);
  IntersectionScenario sc({cone(p3), plane(p3)});
  EXPECT_TRUE(milnor_thm41(sc).is_zero());
  EXPECT_TRUE(milnor_cor11(sc).is_zero());
  EXPECT_TRUE(milnor_cor12(sc).is_zero());
  EXPECT_TRUE(milnor_pp_type(sc, PPMode::FullExpansion).is_zero());
  EXPECT_TRUE(milnor_aluffi_cor(sc).is_zero());
}

TEST(Intersect, TermsForTwoHypersurfaces) {
  auto p3 = AmbientSpace::proj_space(3);
  IntersectionScenario sc({two_planes(p3), plane(p3)});
  const auto terms = thm41_terms(sc);
  ASSERT_EQ(terms.size(), 3u);
  for (const auto& t : terms) {
    if (t.selector.eps == std::vector<int>{0, 0}) EXPECT_EQ(t.sign, -1);  // (-1)^3
    else EXPECT_EQ(t.sign, -1);
  }
}

TEST(Intersect, AProductTelescopes) {
  auto p3 = AmbientSpace::proj_space(3);
  IntersectionScenario sc({two_planes(p3), plane(p3), cone(p3)});
  // i = 1: Vir(X2) Vir(X3); i = 2: SM(X1) Vir(X3); i = 3: SM(X1) SM(X2).
  const auto& h = sc.hyps();
  EXPECT_EQ(a_product(sc, 1), h[1].classes.virt * h[2].classes.virt);
  EXPECT_EQ(a_product(sc, 2), h[0].classes.csm * h[2].classes.virt);
  EXPECT_EQ(a_product(sc, 3), h[0].classes.csm * h[1].classes.csm);
}

TEST(Intersect, CrossValidateReports) {
  auto p3 = AmbientSpace::proj_space(3);
  IntersectionScenario sc({two_planes(p3), plane(p3)});
  CrossValidateOptions opts;
  opts.expected_chi = 3;
  opts.support_min_codim = 3;
  const ScenarioReport rep = cross_validate(sc, opts);
  EXPECT_TRUE(rep.all_pass()) << rep.render_text(false);
  ASSERT_NE(rep.find_class("X.milnor[pp_full]"), nullptr);
  EXPECT_EQ(*rep.find_value("X.chi"), "3");
}

TEST(Intersect, NeedsTwoHypersurfaces) {
  auto p3 = AmbientSpace::proj_space(3);
  IntersectionScenario sc({plane(p3)});
  EXPECT_THROW(milnor_thm41(sc), Error);
  EXPECT_THROW(IntersectionScenario(std::vector<HypersurfaceData>{}), Error);
}

TEST(Intersect, FormulaSelection) {
  EXPECT_TRUE(FormulaSelection::parse("cor12").cor12);
  EXPECT_FALSE(FormulaSelection::parse("cor12").thm41);
  EXPECT_THROW(FormulaSelection::parse("cor13"), Error);
}
