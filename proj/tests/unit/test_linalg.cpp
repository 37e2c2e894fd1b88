#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace liecoh;
using liecoh::testing::mat;
using liecoh::testing::vec;

TEST(Scalar, ParsesAndPrints) {
  EXPECT_EQ(Scalar::parse("1/2+3/4*i"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse(" -2 "), Scalar(-2));
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
  EXPECT_EQ(Scalar::parse("2/4").str(), "1/2");
  EXPECT_EQ(Scalar::parse(Scalar(Rational(-1, 3), 2).str()), Scalar(Rational(-1, 3), 2));
}

TEST(Scalar, MalformedTokenIsNamed) {
  try {
    Scalar::parse("1//2");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("1//2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
}

TEST(Scalar, FieldOperations) {
  Scalar z(Rational(1), Rational(2));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z * z.conj(), Scalar(5));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Rank, SpecExamples) {
  Matrix m(2, 2);
  m(0, 0) = Scalar(1);
  m(0, 1) = Scalar::i();
  m(1, 0) = Scalar::i();
  m(1, 1) = Scalar(-1);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
  EXPECT_EQ(rank(Matrix::identity(4)), 4u);
}

TEST(Kernel, SpecExamples) {
  EXPECT_EQ(kernel(Matrix(3, 3)).dim(), 3u);
  EXPECT_EQ(kernel(Matrix::identity(2)).dim(), 0u);
  Subspace k = kernel(mat({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(vec({1, -1})));
}

TEST(Subspaces, SumAndIntersection) {
  Subspace e1 = Subspace::span(3, {vec({1, 0, 0})});
  Subspace e2 = Subspace::span(3, {vec({0, 1, 0})});
  Subspace e12 = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace e23 = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(subspace_sum(e1, e2), e12);
  EXPECT_EQ(subspace_sum(e12, e12), e12);
  EXPECT_EQ(subspace_sum(e12, e23).dim(), 3u);
  EXPECT_EQ(subspace_intersect(e12, e23), e2);
  EXPECT_EQ(subspace_intersect(e12, Subspace::zero(3)), Subspace::zero(3));
  EXPECT_EQ(subspace_intersect(e12, e12), e12);
}

TEST(Subspaces, QuotientDim) {
  Subspace big = Subspace::full(5);
  Subspace small = Subspace::span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 1, 0, 0})});
  EXPECT_EQ(quotient_dim(big, small), 3u);
  EXPECT_EQ(quotient_dim(small, small), 0u);
  EXPECT_EQ(quotient_dim(small, Subspace::zero(5)), 2u);
  EXPECT_THROW(quotient_dim(small, big), PreconditionFailed);
}

TEST(Subspaces, EchelonFormIsCanonical) {
  Subspace a = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
  Subspace b = Subspace::span(3, {vec({1, 3, 4}), vec({2, 4, 6}), vec({0, 0, 0})});
  EXPECT_EQ(a, b);
  Vector x = vec({2, 5, 7});
  EXPECT_EQ(a.combine(a.coordinates(x)), x);
}

TEST(Subquotients, InducedMapOnHomology) {
  // d: C^1 -> C^2 of a tiny complex 0 -> C -d0-> C^2 -d1-> C -> 0
  Matrix d0 = mat({{1}, {0}});
  Matrix d1 = mat({{0, 1}});
  Subquotient h1(kernel(d1), image(d0));
  EXPECT_EQ(h1.dim(), 0u);
  Subquotient c(Subspace::full(2), image(d0));
  EXPECT_EQ(c.dim(), 1u);
  Matrix induced = induced_map(d1, c, Subquotient(Subspace::full(1), Subspace::zero(1)));
  EXPECT_EQ(rank(induced), 1u);
}

TEST(Inverse, RoundTrip) {
  Matrix m = mat({{2, 1}, {1, 1}});
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
  EXPECT_THROW(inverse(mat({{1, 2}, {2, 4}})), PreconditionFailed);
  EXPECT_EQ(determinant(m), Scalar(1));
}

TEST(Subsets, BinomialAndIndex) {
  EXPECT_EQ(binomial(6, 3), 20u);
  SubsetIndex idx(4, 2);
  ASSERT_EQ(idx.size(), 6u);
  for (std::size_t k = 0; k < idx.size(); ++k) EXPECT_EQ(idx.index(idx.mask(k)), k);
  EXPECT_EQ(idx.mask(0), bit(0) | bit(1));
}
