#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace liecoh;
using liecoh::testing::vec;

TEST(RootSystem, A1IsSl2) {
  auto s = build_preset("A1");
  const LieAlgebra& g = *s.algebra;
  ASSERT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.basis_names(), (std::vector<std::string>{"h", "e", "f"}));
  EXPECT_EQ(g.bracket(g.basis_vector(1), g.basis_vector(2)), vec({1, 0, 0}));
  EXPECT_EQ(g.bracket(g.basis_vector(0), g.basis_vector(1)), vec({0, 2, 0}));
  EXPECT_EQ(g.bracket(g.basis_vector(0), g.basis_vector(2)), vec({0, 0, -2}));
}

TEST(RootSystem, Dimensions) {
  EXPECT_EQ(build_preset("A2").algebra->dim(), 8u);
  EXPECT_EQ(build_preset("B2").algebra->dim(), 10u);
  EXPECT_EQ(build_preset("G2").algebra->dim(), 14u);
  EXPECT_EQ(preset_datum("B3").positive_roots.size(), 9u);
  EXPECT_EQ(preset_datum("E6").positive_roots.size(), 36u);
  EXPECT_EQ(preset_datum("F4").positive_roots.size(), 24u);
}

TEST(RootSystem, SerreAndAxioms) {
  for (const auto& name : preset_names()) {
    auto s = build_preset(name);
    EXPECT_TRUE(check_antisymmetry(*s.algebra).pass) << name;
    EXPECT_TRUE(check_jacobi(*s.algebra).pass) << name;
    EXPECT_TRUE(check_real_structure(*s.algebra).pass()) << name;
    EXPECT_TRUE(is_semisimple(*s.algebra)) << name;
  }
  EXPECT_TRUE(check_jacobi(*build_semisimple(preset_datum("C3")).algebra).pass);
}

TEST(RootSystem, RejectsNonFiniteType) {
  EXPECT_THROW(make_cartan_datum({{2, -3}, {-3, 2}}), PreconditionFailed);
  EXPECT_THROW(preset_datum("Q7"), ParseError);
}

TEST(Borel, DimensionsAndEllipticity) {
  auto a1 = build_preset("A1");
  Subalgebra b1 = borel(a1);
  EXPECT_EQ(b1.space(), Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}));
  EXPECT_TRUE(classify_structure(*a1.algebra, b1).elliptic);
  auto a2 = build_preset("A2");
  Subalgebra b2 = borel(a2);
  EXPECT_EQ(b2.dim(), 5u);
  EXPECT_TRUE(classify_structure(*a2.algebra, b2).elliptic);
}

TEST(Parabolic, SubsetsOfSimpleRoots) {
  auto a2 = build_preset("A2");
  EXPECT_EQ(parabolic(a2, {}).space(), borel(a2).space());
  EXPECT_EQ(parabolic(a2, {1, 2}).dim(), 8u);
  Subalgebra p1 = parabolic(a2, {1});
  EXPECT_EQ(p1.dim(), 6u);
  StructureClass c = classify_structure(*a2.algebra, p1);
  EXPECT_TRUE(c.elliptic);
  EXPECT_EQ(c.dim_intersection, 4u);
  EXPECT_THROW(parabolic(a2, {3}), PreconditionFailed);
}

TEST(Hermitian, IdentityOnAllTriples) {
  for (const auto& name : {"A1", "A2"}) {
    auto s = build_preset(name);
    HermitianProduct h = hermitian_extension(*s.algebra);
    EXPECT_TRUE(is_conjugate_symmetric(h.gram));
    EXPECT_TRUE(is_positive_definite(h.gram));
    EXPECT_TRUE(check_hermitian_identity(*s.algebra, h).pass) << name;
  }
}

TEST(Hermitian, NotAdInvariant) {
  auto s = build_preset("A1");
  HermitianProduct h = hermitian_extension(*s.algebra);
  auto w = ad_invariance_failure(*s.algebra, h);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::array<std::size_t, 3>{0, 1, 1}));
  const LieAlgebra& g = *s.algebra;
  Vector x = g.basis_vector(0), y = g.basis_vector(1);
  // <[h,e],e> + <e,[h,e]> = 2<e,e> + 2<e,e> != 0
  EXPECT_NE(h(g.bracket(x, y), y) + h(y, g.bracket(x, y)), Scalar(0));
}
