#include <cmath>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hyperorth/catalog.hpp"
#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"
#include "hyperorth/ladder.hpp"

using namespace hyperorth;
using hyperorth::testing::make;
using hyperorth::testing::Q;

TEST(ApplyA, Examples) {
  const auto t = make(CaseId::OneMinusS2, "-5", "0");
  const AssocFunction up = apply_A(make_assoc(t, 1, 0));
  EXPECT_EQ(up.m, 1);
  EXPECT_EQ(up.phi, Polynomial{1});

  const auto h = make(CaseId::One, "-2", "0");
  EXPECT_EQ(apply_A(make_assoc(h, 3, 1)).phi, poly_coeffs(h, 3).derivative(2));
  EXPECT_EQ(apply_A(make_assoc(h, 3, 1)).phi, make_assoc(h, 3, 2).phi);
  for (const auto& f : standard_families()) EXPECT_TRUE(apply_A(make_assoc(f.params, 2, 2)).is_zero());
}

TEST(ApplyAplus, Examples) {
  const auto h = make(CaseId::One, "-2", "0");
  const AssocFunction down = apply_Aplus(make_assoc(h, 1, 1));
  EXPECT_EQ(down.m, 0);
  EXPECT_EQ(down.phi, (Polynomial{0, 2}));

  const AssocFunction zero = apply_Aplus(make_level_function(h, 2, Polynomial{}));
  EXPECT_TRUE(zero.is_zero());

  const auto s = make(CaseId::S, "-1", "1");
  EXPECT_EQ(apply_Aplus(make_assoc(s, 2, 1)).phi, (Rational(2) * Polynomial{2, -4, 1}));
  EXPECT_THROW(apply_Aplus(make_assoc(s, 2, 0)), IndexError);
}

TEST(BuildFromTop, Examples) {
  const auto h = make(CaseId::One, "-2", "0");
  EXPECT_EQ(build_from_top(h, 1, 0).phi, (Polynomial{0, 1}));
  const auto m = make(CaseId::S2, "-9", "2");
  EXPECT_EQ(build_from_top(m, 4, 0).phi, poly_coeffs(m, 4));
  for (const auto& f : standard_families()) EXPECT_EQ(build_from_top(f.params, 3, 2).phi, make_assoc(f.params, 3, 2).phi);
  EXPECT_THROW(build_from_top(m, 2, 2), IndexError);
  EXPECT_THROW(build_from_top(m, 5, 0), IndexAboveCutoff);
}

TEST(NormChain, GaussianMoments) {
  const auto h = make(CaseId::One, "-2", "0");
  const auto n = norm_chain(h, 1);
  ASSERT_EQ(n.size(), 2u);
  EXPECT_NEAR(n[0] * n[0], std::sqrt(M_PI) / 2, 1e-12);
  EXPECT_NEAR(n[1] * n[1], std::sqrt(M_PI), 1e-12);
  EXPECT_NEAR(n[1] * n[1] / (n[0] * n[0]), 2.0, 1e-12);
  EXPECT_EQ(norm_chain(h, 0).size(), 1u);
}

TEST(NormChain, HyperbolicRatio) {
  const auto p = make(CaseId::S2MinusOne, "-8", "12");
  const auto n = norm_chain(p, 2);
  const double expect = std::sqrt(Rational(lambda(p, 2) - lambda(p, 0)).get_d());
  EXPECT_NEAR(n[1] / n[0], expect, 1e-6 * expect);
}

TEST(Factorization, EigenfunctionsAndArbitraryPolynomial) {
  for (const auto& fam : standard_families()) {
    const auto& p = fam.params;
    const double s = p.case_id() == CaseId::S2MinusOne ? 1.9 : (p.case_id() == CaseId::S ? 1.1 : 0.45);
    for (int m = 0; m <= 2 && p.cutoff().admits(m + 1); ++m) {
      for (int l = m; l < m + 3 && p.cutoff().admits(l); ++l) {
        const auto [r1, r2] = factorization_residual(p, m, make_assoc(p, l, m), s);
        const double scale = 1.0 + std::abs(lambda(p, l).get_d() * assoc_eval(make_assoc(p, l, m), s));
        EXPECT_LT(std::abs(r1), 1e-10 * scale) << fam.name;
        EXPECT_LT(std::abs(r2), 1e-8 * scale) << fam.name;
      }
      const auto [g1, g2] = factorization_residual(p, m, make_level_function(p, m, Polynomial{1, 0, 0, 1}), s);
      EXPECT_LT(std::abs(g1), 1e-9) << fam.name;
      EXPECT_LT(std::abs(g2), 1e-9) << fam.name;
    }
  }
  const auto m = make(CaseId::S2, "-9", "2");
  EXPECT_THROW(factorization_residual(m, 4, make_assoc(m, 4, 4), 0.5), IndexAboveCutoff);
}

TEST(Intertwining, Examples) {
  const auto m = make(CaseId::S2, "-9", "2");
  for (double s : {0.2, 0.9, 2.5}) {
    const auto [r1, r2] = intertwine_residual(m, 1, make_assoc(m, 3, 2), s);
    EXPECT_LT(std::abs(r1), 1e-8 * 16 * 21);
    EXPECT_LT(std::abs(r2), 1e-8 * 16 * 21);
    const auto [z1, z2] = intertwine_residual(m, 1, make_level_function(m, 2, Polynomial{}), s);
    EXPECT_EQ(z1, 0.0);
    EXPECT_EQ(z2, 0.0);
  }
  const auto sc = make(CaseId::S2PlusOne, "-7", "0");
  for (double s : {-1.5, 0.0, 0.8}) {
    const auto [r1, r2] = intertwine_residual(sc, 1, make_level_function(sc, 2, Polynomial{0, 0, 1}), s);
    EXPECT_LT(std::abs(r1), 1e-6);
    EXPECT_LT(std::abs(r2), 1e-6);
  }
}
