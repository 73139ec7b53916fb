#include <gtest/gtest.h>

#include "milnor/chow.hpp"

using namespace milnor;

namespace {

CycleClass cls(const AmbientPtr& a, const char* text) { return parse_class(a, text); }

}  // namespace

TEST(Chow, ProjectiveSpaceTruncates) {
  auto p2 = AmbientSpace::proj_space(2);
  const CycleClass h = CycleClass::generator(p2, 0);
  EXPECT_TRUE((h * h * h).is_zero());
  EXPECT_EQ((h * h).str(), "h^2");
  EXPECT_EQ(degree(h * h), 1);
}

TEST(Chow, InverseOfOnePlusThreeH) {
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_EQ(ring_inv(cls(p2, "1 + 3*h")), cls(p2, "1 - 3*h + 9*h^2"));
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(ring_inv(cls(p3, "1 + 2*h")), cls(p3, "1 - 2*h + 4*h^2 - 8*h^3"));
}

TEST(Chow, NonUnitHasNoInverse) {
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_THROW(ring_inv(cls(p2, "2 + h")), Error);
  EXPECT_THROW(ring_inv(cls(p2, "h")), Error);
}

TEST(Chow, NegativePowers) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(ring_ipow(cls(p3, "1 + h"), -4), cls(p3, "1 - 4*h + 10*h^2 - 20*h^3"));
  EXPECT_EQ(ring_ipow(cls(p3, "1 + h"), 0), CycleClass::one(p3));
}

TEST(Chow, CanonicalRendering) {
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_EQ(cls(p3, "2h + 4h^2 + 4h^3").str(), "4*h^3 + 4*h^2 + 2*h");
  EXPECT_EQ(cls(p3, "-h^2").str(), "-h^2");
  EXPECT_EQ(CycleClass::zero(p3).str(), "0");
  EXPECT_EQ(cls(p3, "1 - h").str(), "-h + 1");
}

TEST(Chow, MultiProjective) {
  auto m = AmbientSpace::multi_proj({1, 1});
  EXPECT_EQ(m->dimension(), 2);
  const CycleClass h1 = CycleClass::generator(m, 0), h2 = CycleClass::generator(m, 1);
  EXPECT_TRUE((h1 * h1).is_zero());
  EXPECT_EQ(degree(h1 * h2), 1);
  EXPECT_EQ(cls(m, "1 + 2 h1 h2"), CycleClass::one(m) + Integer(2) * (h1 * h2));
}

TEST(Chow, ComponentAndCodimensions) {
  auto p3 = AmbientSpace::proj_space(3);
  const CycleClass a = cls(p3, "1 + 2h + 5h^3");
  EXPECT_EQ(component(a, 1), cls(p3, "2h"));
  EXPECT_TRUE(component(a, 2).is_zero());
  EXPECT_EQ(a.codimensions(), (std::vector<int>{0, 1, 3}));
  EXPECT_FALSE(a.is_homogeneous(1));
  EXPECT_THROW(component(a, 4), Error);
}

TEST(Chow, AmbientMismatchThrows) {
  auto p2 = AmbientSpace::proj_space(2);
  auto p3 = AmbientSpace::proj_space(3);
  EXPECT_THROW(CycleClass::one(p2) + CycleClass::one(p3), Error);
  EXPECT_TRUE(same_ambient(p2, AmbientSpace::proj_space(2)));
}

TEST(Chow, ParseErrorsNameTheOffset) {
  auto p2 = AmbientSpace::proj_space(2);
  try {
    parse_class(p2, "3*h + q");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
  }
}

TEST(Chow, ProjBundleRelation) {
  // Over P^1, E = O(a) + O(b): z^2 = (a+b) h z - ab h^2 = (a+b) h z.
  auto p1 = AmbientSpace::proj_space(1);
  const int a = 2, b = 3;
  const CycleClass c = parse_class(p1, "1 + 5*h");
  auto pb = AmbientSpace::proj_bundle(p1, 2, c);
  EXPECT_EQ(pb->dimension(), 2);
  const CycleClass z = CycleClass::generator(pb, 1);
  EXPECT_EQ(z * z, Integer(a + b) * (CycleClass::generator(pb, 0) * z));
  EXPECT_EQ(degree(z * z), a + b);
}

TEST(Chow, BasisMonomialsCountBetti) {
  EXPECT_EQ(basis_monomials(AmbientSpace::proj_space(4)).size(), 5u);
  EXPECT_EQ(basis_monomials(AmbientSpace::multi_proj({2, 1})).size(), 6u);
  auto p2 = AmbientSpace::proj_space(2);
  EXPECT_EQ(basis_monomials(AmbientSpace::proj_bundle(p2, 3, parse_class(p2, "1 + h"))).size(), 9u);
}
