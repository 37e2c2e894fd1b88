#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace liecoh;

TEST(Rng, Deterministic) {
  Rng a(7), b(7);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(a.uniform(-5, 5), b.uniform(-5, 5));
}

TEST(RandomCase, ValidAlgebrasAndModules) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    RandomCase rc = random_case(rng, 5);
    EXPECT_LE(rc.algebra->dim(), 5u);
    EXPECT_TRUE(jacobi_oracle(*rc.algebra)) << rc.family;
    EXPECT_TRUE(check_jacobi(*rc.algebra).pass) << rc.family;
    for (const auto& m : rc.modules) EXPECT_TRUE(check_homomorphism(m).pass) << rc.family;
  }
}

TEST(PropertySuite, SmallRun) {
  for (const auto& r : run_property_suite(11, 10)) EXPECT_TRUE(r.pass()) << r.name << ": " << r.first_failure;
  PropertyResult red = reducibility_property(11, 10, {"A1"});
  EXPECT_TRUE(red.pass()) << red.first_failure;
}
