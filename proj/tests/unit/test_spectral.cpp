#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace liecoh;
using liecoh::testing::vec;

TEST(Filtration, Sl2BorelFlags) {
  auto s = liecoh::testing::a1();
  FilteredComplex f = hs_filtration(borel(s), trivial_module(s.algebra));
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(f.flag_length(n), n + 2);
    for (int p = 0; p <= static_cast<int>(n); ++p) EXPECT_TRUE(f.level(p, n).contains(f.level(p + 1, n)));
    EXPECT_EQ(f.level(static_cast<int>(n) + 1, n).dim(), 0u);
  }
}

TEST(Filtration, WholeAlgebra) {
  auto s = liecoh::testing::a1();
  FilteredComplex f = hs_filtration(Subalgebra::whole(s.algebra), trivial_module(s.algebra));
  // F^1 C^q = forms vanishing on q arguments of g = 0
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(f.level(1, n).dim(), 0u);
}

TEST(SpectralSequence, Sl2BorelStableAtTwo) {
  auto s = liecoh::testing::a1();
  SpectralSequence ss = run_spectral_sequence(hs_filtration(borel(s), trivial_module(s.algebra)));
  EXPECT_EQ(ss.stable_at, 2);
  EXPECT_TRUE(ss.converges);
  EXPECT_TRUE(ss.monotone);
  EXPECT_TRUE(ss.squares_zero);
  EXPECT_TRUE(ss.next_page_is_homology);
  EXPECT_EQ(ss.total_cohomology, (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_EQ(ss.limit().dim(0, 0), 1u);
  EXPECT_EQ(ss.limit().dim(1, 2), 1u);
}

TEST(SpectralSequence, ZeroDifferentialIsStableAtZero) {
  auto g = liecoh::testing::abelian_ptr(3);
  Subalgebra v = Subalgebra::make(g, Subspace::span(3, {vec({1, 0, 0})}));
  SpectralSequence ss = run_spectral_sequence(hs_filtration(v, trivial_module(g)));
  EXPECT_EQ(ss.stable_at, 0);
  for (const auto& page : ss.pages) EXPECT_EQ(page.dims(), ss.pages.front().dims());
  EXPECT_TRUE(ss.converges);
}

TEST(SpectralSequence, PageCapIsEnforced) {
  auto s = liecoh::testing::a1();
  FilteredComplex f = hs_filtration(borel(s), trivial_module(s.algebra));
  EXPECT_THROW(run_spectral_sequence(f, 1), CapExceeded);
}

TEST(E2, TensorReadingMatchesLiteralDoesNot) {
  for (const auto& name : {"A1", "A2"}) {
    auto s = build_preset(name);
    for (int p : {0, 1}) {
      E2Report r = hs_e2_check(borel(s), p);
      EXPECT_TRUE(r.pass) << name << " p=" << p;
      EXPECT_FALSE(r.literal_matches) << name << " p=" << p;
    }
  }
}

TEST(Reducibility, Sl2BorelExamples) {
  auto s = liecoh::testing::a1();
  Subalgebra b = borel(s);
  ReducibilityReport e = reducibility_check(b, Subspace::span(3, {vec({0, 1, 0})}));
  EXPECT_TRUE(e.pass());
  EXPECT_EQ(e.complement, Subspace::span(3, {vec({1, 0, 0})}));
  ReducibilityReport all = reducibility_check(b, b.space());
  EXPECT_EQ(all.complement.dim(), 0u);
  EXPECT_TRUE(all.pass());
  ReducibilityReport none = reducibility_check(b, Subspace::zero(3));
  EXPECT_EQ(none.complement, b.space());
  // span{h + e} is not t-invariant
  EXPECT_THROW(reducibility_check(b, Subspace::span(3, {vec({1, 1, 0})})), PreconditionFailed);
}

TEST(Reducibility, InvariantClosure) {
  auto s = liecoh::testing::a1();
  const LieAlgebra& g = *s.algebra;
  Subspace t = Subspace::span(3, {vec({1, 0, 0})});
  EXPECT_EQ(invariant_closure(g, t, Subspace::span(3, {vec({1, 1, 0})})),
            Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}));
  EXPECT_TRUE(is_invariant(g, Subspace::full(3), Subspace::full(3)));
}
