#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace liecoh;
using liecoh::testing::vec;

TEST(LieAlgebra, Sl2Brackets) {
  auto g = liecoh::testing::sl2_from_brackets();
  EXPECT_EQ(g->bracket(g->basis_vector(1), g->basis_vector(2)), vec({1, 0, 0}));
  EXPECT_EQ(g->bracket(g->basis_vector(2), g->basis_vector(1)), vec({-1, 0, 0}));
  EXPECT_EQ(g->bracket(g->basis_vector(1), g->basis_vector(1)), vec({0, 0, 0}));
  auto ab = LieAlgebra::abelian(4);
  EXPECT_TRUE(is_zero_vector(ab.bracket(ab.basis_vector(0), ab.basis_vector(3))));
}

TEST(LieAlgebra, JacobiPassAndFlippedSign) {
  EXPECT_TRUE(check_jacobi(*liecoh::testing::sl2_from_brackets()).pass);
  EXPECT_TRUE(check_jacobi(LieAlgebra::abelian(5)).pass);
  auto flipped = check_jacobi(*liecoh::testing::sl2_from_brackets(2));
  ASSERT_FALSE(flipped.pass);
  EXPECT_EQ(*flipped.witness, (std::array<std::size_t, 3>{0, 1, 2}));
}

TEST(LieAlgebra, AntisymmetryWitness) {
  auto g = liecoh::testing::sl2_from_brackets();
  std::vector<Vector> table;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      auto s = g->structure(a, b);
      table.emplace_back(s.begin(), s.end());
    }
  table[2 * 3 + 1][0] = Scalar(1);  // [f,e] = h as well
  auto res = check_antisymmetry(LieAlgebra(g->basis_names(), table));
  ASSERT_FALSE(res.pass);
  EXPECT_EQ(*res.witness, (std::array<std::size_t, 2>{1, 2}));
}

TEST(Subalgebra, ClosureChecks) {
  auto g = liecoh::testing::sl2_from_brackets();
  EXPECT_TRUE(check_subalgebra(*g, Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})})).pass);
  auto ef = check_subalgebra(*g, Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));
  ASSERT_FALSE(ef.pass);
  EXPECT_EQ(*ef.witness, (std::array<std::size_t, 2>{0, 1}));
  EXPECT_TRUE(check_subalgebra(*g, Subspace::full(3)).pass);
  EXPECT_THROW(Subalgebra::make(g, Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})})), PreconditionFailed);
}

TEST(RealStructure, CompactFormOfSl2) {
  auto s = liecoh::testing::a1();
  const LieAlgebra& g = *s.algebra;
  EXPECT_TRUE(check_real_structure(g).pass());
  Subalgebra b = borel(s);
  Subspace conj = conjugate_subspace(g, b.space());
  EXPECT_EQ(conj, Subspace::span(3, {vec({1, 0, 0}), vec({0, 0, 1})}));
  EXPECT_EQ(real_form_dimension(g), 3u);
}

TEST(Classify, WholeBorelAndLine) {
  auto s = liecoh::testing::a1();
  const LieAlgebra& g = *s.algebra;
  StructureClass whole = classify_structure(g, Subalgebra::whole(s.algebra));
  EXPECT_TRUE(whole.elliptic);
  EXPECT_TRUE(whole.essentially_real);
  EXPECT_FALSE(whole.complex);
  StructureClass b = classify_structure(g, borel(s));
  EXPECT_TRUE(b.elliptic);
  EXPECT_FALSE(b.complex);
  EXPECT_FALSE(b.essentially_real);
  EXPECT_EQ(b.dim_intersection, 1u);
  StructureClass line = classify_structure(g, Subalgebra::make(s.algebra, Subspace::span(3, {vec({0, 1, 0})})));
  EXPECT_FALSE(line.elliptic);
  EXPECT_EQ(line.dim_sum, 2u);
  StructureClass zero = classify_structure(g, Subalgebra::zero(s.algebra));
  EXPECT_FALSE(zero.elliptic);
}

TEST(Classify, ComplexImpliesElliptic) {
  for (const auto& name : {"A1", "A2", "B2"}) {
    auto s = build_preset(name);
    // n+ is never complex here, but must never be complex without being elliptic
    std::vector<Vector> pos;
    for (std::size_t k = 0; k < s.num_positive(); ++k) pos.push_back(s.algebra->basis_vector(s.e_index(k)));
    StructureClass c = classify_structure(*s.algebra, Subalgebra::make(s.algebra, Subspace::span(s.algebra->dim(), pos)));
    EXPECT_TRUE(!c.complex || c.elliptic) << name;
  }
}
