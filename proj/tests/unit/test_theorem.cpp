#include <gtest/gtest.h>

#include <cstdlib>

#include "helpers.hpp"

using namespace liecoh;
using liecoh::testing::vec;

TEST(Convolve, Kunneth) {
  EXPECT_EQ(convolve({1, 1}, {1, 0, 1}, 4), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(convolve({1, 0}, {1, 1}, 3), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(convolve({}, {1}, 2), (std::vector<std::size_t>{0, 0}));
}

TEST(Theorem1, A1Borel) {
  auto s = liecoh::testing::a1();
  TheoremReport r = theorem1_crosscheck(borel(s), 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.dim_k, 1u);
  EXPECT_EQ(r.h_k, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.slots.size(), 9u);
  EXPECT_EQ(r.slots[0].lhs, 1u);
  for (const auto& slot : r.slots) EXPECT_EQ(slot.lhs, slot.rhs) << slot.p << "," << slot.q;
  // the dual-of-forms reading disagrees at p = 1
  EXPECT_NE(r.slots[4].rhs_forms_dual, r.slots[4].lhs);
}

TEST(Theorem1, WholeAlgebraIsBetti) {
  auto s = liecoh::testing::a1();
  TheoremReport r = theorem1_crosscheck(Subalgebra::whole(s.algebra), 0);
  EXPECT_TRUE(r.pass);
  std::vector<std::size_t> lhs;
  for (const auto& slot : r.slots) lhs.push_back(slot.lhs);
  EXPECT_EQ(lhs, (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(Theorem1, Refusals) {
  auto s = liecoh::testing::a1();
  EXPECT_THROW(theorem1_crosscheck(Subalgebra::make(s.algebra, Subspace::span(3, {vec({0, 1, 0})})), 1),
               PreconditionFailed);
  auto plain = liecoh::testing::sl2_from_brackets();
  EXPECT_THROW(theorem1_crosscheck(Subalgebra::whole(plain), 1), PreconditionFailed);
  Matrix minus = Matrix::identity(2) * Scalar(-1);
  auto ab = std::make_shared<LieAlgebra>(LieAlgebra({"x", "y"}, std::vector<Vector>(4, Vector(2)), minus));
  EXPECT_THROW(theorem1_crosscheck(Subalgebra::whole(ab), 1), PreconditionFailed);
}

TEST(Limits, CapAndEnvironment) {
  Limits l;
  l.max_dim = 5;
  EXPECT_THROW(l.enforce(*build_preset("A2").algebra), CapExceeded);
  EXPECT_NO_THROW(l.enforce(*build_preset("A1").algebra));
  setenv("LIE_COH_MAX_DIM", "40", 1);
  EXPECT_EQ(Limits::from_env().max_dim, 40u);
  setenv("LIE_COH_MAX_DIM", "abc", 1);
  EXPECT_THROW(Limits::from_env(), ParseError);
  unsetenv("LIE_COH_MAX_DIM");
  EXPECT_EQ(Limits::from_env().max_dim, 12u);
}
