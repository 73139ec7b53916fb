#include <gtest/gtest.h>

#include "milnor/classes.hpp"

using namespace milnor;

namespace {

Stratum open_stratum(std::optional<CycleClass> csm = std::nullopt) {
  Stratum s;
  s.name = "regular";
  s.open = true;
  s.csm_closure = std::move(csm);
  return s;
}

}  // namespace

TEST(Classes, VirtualClassOfACubic) {
  auto p2 = AmbientSpace::proj_space(2);
  const BundleClass l = line_bundle(p2, {3});
  EXPECT_EQ(virtual_class(p2, l, l.chern_k(1)), parse_class(p2, "3h"));
  EXPECT_THROW(virtual_class(p2, l, parse_class(p2, "2h")), Error);
}

TEST(Classes, NodalCubic) {
  auto p2 = AmbientSpace::proj_space(2);
  StratifiedHypersurface hyp(line_bundle(p2, {3}), {open_stratum(), point_stratum(p2, "node", 0)});
  const ClassBundle3 c = hypersurface_classes(hyp);
  EXPECT_EQ(c.milnor, parse_class(p2, "h^2"));
  EXPECT_EQ(c.csm, parse_class(p2, "3h + h^2"));
  EXPECT_EQ(chi_of_closure(c.csm), 1);
  const CycleClass al = aluffi_milnor(hyp, mu_class(hyp, segre_builtin(p2, SegreCenter::points(1))));
  EXPECT_EQ(al, c.milnor);
}

TEST(Classes, CuspidalCubic) {
  auto p2 = AmbientSpace::proj_space(2);
  StratifiedHypersurface hyp(line_bundle(p2, {3}), {open_stratum(), point_stratum(p2, "cusp", -1)});
  EXPECT_EQ(milnor_pp(hyp), parse_class(p2, "2h^2"));
  EXPECT_EQ(chi_of_closure(hypersurface_classes(hyp).csm), 2);
}

TEST(Classes, QuadricCone) {
  auto p3 = AmbientSpace::proj_space(3);
  StratifiedHypersurface hyp(line_bundle(p3, {2}), {open_stratum(), point_stratum(p3, "vertex", 2)});
  const ClassBundle3 c = hypersurface_classes(hyp);
  EXPECT_EQ(c.virt, parse_class(p3, "2h + 4h^2 + 4h^3"));
  EXPECT_EQ(c.milnor, parse_class(p3, "h^3"));
  EXPECT_EQ(c.csm, parse_class(p3, "2h + 4h^2 + 3h^3"));
  EXPECT_EQ(degree(c.virt), 4);
}

TEST(Classes, TwoPlanesByBothRoutes) {
  auto p3 = AmbientSpace::proj_space(3);
  const CycleClass csm = parse_class(p3, "2h + 5h^2 + 4h^3");
  StratifiedHypersurface hyp(line_bundle(p3, {2}), {open_stratum(csm), linear_stratum(p3, "axis", 1, 0)});
  const ClassBundle3 c = hypersurface_classes(hyp);
  EXPECT_EQ(c.milnor, parse_class(p3, "-h^2"));
  EXPECT_EQ(milnor_from_definition(c.virt, csm, 3, 1), parse_class(p3, "-h^2"));
  const CycleClass al = aluffi_milnor(hyp, mu_class(hyp, segre_builtin(p3, SegreCenter::linear(1))));
  EXPECT_EQ(al, parse_class(p3, "-h^2"));
}

TEST(Classes, SegreBuiltins) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(segre_builtin(p3, SegreCenter::points(2)), parse_class(p3, "2h^3"));
  EXPECT_EQ(segre_builtin(p3, SegreCenter::linear(1)), parse_class(p3, "h^2 - 2h^3"));
  EXPECT_THROW(parse_segre_center("jacobian(f)"), Error);
  EXPECT_EQ(parse_segre_center(" linear( 2 ) ").value, 2);
}

TEST(Classes, AluffiOperations) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(aluffi_dual(parse_class(p3, "1 + h + h^2 + h^3")), parse_class(p3, "1 - h + h^2 - h^3"));
  const BundleClass l = line_bundle(p3, {2});
  // a^1 / c(L): h (1 - 2h + 4h^2).
  EXPECT_EQ(aluffi_tensor(parse_class(p3, "h"), l), parse_class(p3, "h - 2h^2 + 4h^3"));
}

TEST(Classes, SignHelpers) {
  EXPECT_EQ(sign_pow(0), 1);
  EXPECT_EQ(sign_pow(3), -1);
  EXPECT_EQ(sign_pow(-2), 1);
}
