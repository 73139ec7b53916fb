#include <gtest/gtest.h>

#include "milnor/bundle.hpp"

using namespace milnor;

TEST(Bundle, TangentOfProjectiveSpace) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(tangent_bundle(p3).chern(), parse_class(p3, "1 + 4h + 6h^2 + 4h^3"));
  auto m = AmbientSpace::multi_proj({1, 1});
  EXPECT_EQ(tangent_bundle(m).chern(), parse_class(m, "1 + 2h1 + 2h2 + 4h1 h2"));
}

TEST(Bundle, ValidatesChernClass) {
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_THROW(BundleClass(1, parse_class(p2, "2 + h")), Error);
  EXPECT_THROW(BundleClass(1, parse_class(p2, "1 + h + h^2")), Error);
  EXPECT_NO_THROW(BundleClass(2, parse_class(p2, "1 + h + h^2")));
}

TEST(Bundle, TwistOfSplitBundle) {
  auto p3 = AmbientSpace::proj_space(3);
  const BundleClass e = direct_sum(line_bundle(p3, {1}), line_bundle(p3, {-2}));
  const BundleClass t = tensor_line(e, line_bundle(p3, {3}));
  EXPECT_EQ(t.chern(), (parse_class(p3, "1 + 4h") * parse_class(p3, "1 + h")));
}

TEST(Bundle, DualFlipsOddClasses) {
  auto p3 = AmbientSpace::proj_space(3);
  const BundleClass e(3, parse_class(p3, "1 + 2h - h^2 + 5h^3"));
  EXPECT_EQ(dual(e).chern(), parse_class(p3, "1 - 2h - h^2 - 5h^3"));
}

TEST(Bundle, TopChernAndBinomial) {
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_EQ(top_chern(trivial_bundle(p2, 0)), CycleClass::one(p2));
  EXPECT_EQ(top_chern(direct_sum(line_bundle(p2, {2}), line_bundle(p2, {3}))), parse_class(p2, "6h^2"));
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Bundle, LineBundleChecksDegrees) {
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_THROW(line_bundle(p2, {1, 2}), Error);
}
