#include <gtest/gtest.h>

#include "milnor/intersect.hpp"

using namespace milnor;

TEST(LeCycles, TwoPlanes) {
  auto p3 = AmbientSpace::proj_space(3);
  const BundleClass l = line_bundle(p3, {2});
  LeCycles le{p3, {{1, parse_class(p3, "h^2")}, {0, parse_class(p3, "2h^3")}}};
  const GradedClasses m = le_to_milnor(le, l);
  EXPECT_EQ(total(p3, m), parse_class(p3, "-h^2"));
  EXPECT_EQ(milnor_to_le(m, l).classes, le.classes);
}

TEST(LeCycles, IsolatedPointIsItsOwnLeCycle) {
  auto p2 = AmbientSpace::proj_space(2);
  const LeCycles le = milnor_to_le(split_by_dimension(parse_class(p2, "3h^2")), line_bundle(p2, {4}));
  ASSERT_EQ(le.classes.size(), 1u);
  EXPECT_EQ(le.at(0), parse_class(p2, "3h^2"));
  EXPECT_TRUE(le.at(1).is_zero());
}

TEST(LeCycles, RejectsInhomogeneousPieces) {
  auto p3 = AmbientSpace::proj_space(3);
  GradedClasses bad{{1, parse_class(p3, "h^2 + h^3")}};
  EXPECT_THROW(milnor_to_le(bad, line_bundle(p3, {2})), Error);
  LeCycles le{p3, {{2, parse_class(p3, "h^2")}}};
  EXPECT_THROW(le.validate(), Error);
}

TEST(LeCycles, SplitByDimension) {
  auto p3 = AmbientSpace::proj_space(3);
  const GradedClasses g = split_by_dimension(parse_class(p3, "h + 2h^3"));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.at(2), parse_class(p3, "h"));
  EXPECT_EQ(g.at(0), parse_class(p3, "2h^3"));
}

TEST(LeCycles, IntersectionFormulaOnTwoPlanesCapPlane) {
  auto p3 = AmbientSpace::proj_space(3);
  const BundleClass l2 = line_bundle(p3, {2}), l1 = line_bundle(p3, {1});
  const CycleClass v2 = parse_class(p3, "2h + 4h^2 + 4h^3"), v1 = parse_class(p3, "h + 3h^2 + 3h^3");
  std::vector<LeHypersurface> hyps{
      {LeCycles{p3, {{1, parse_class(p3, "h^2")}, {0, parse_class(p3, "2h^3")}}}, l2, v2,
       parse_class(p3, "2h + 5h^2 + 4h^3")},
      {LeCycles{p3, {}}, l1, v1, v1}};
  EXPECT_EQ(milnor_from_le_intersection(hyps, tangent_bundle(p3)), parse_class(p3, "h^3"));
}
