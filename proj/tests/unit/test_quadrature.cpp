#include <cmath>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hyperorth/catalog.hpp"
#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"
#include "hyperorth/quadrature.hpp"

using namespace hyperorth;
using hyperorth::testing::make;

TEST(Integrate, KnownIntegrals) {
  const double inf = INFINITY;
  auto r = integrate([](double x) { return std::exp(-x * x); }, -inf, inf);
  EXPECT_NEAR(r.value, std::sqrt(M_PI), 1e-13);
  EXPECT_GE(r.abs_error_estimate, 0.0);
  EXPECT_GT(r.nodes_used, 0);
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x); }, 0, inf).value, 1.0, 1e-13);
  EXPECT_NEAR(integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1).value, 2.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::log(x); }, 0, 1).value, -1.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return 1 / (1 + x * x); }, -inf, inf).value, M_PI, 1e-11);
}

TEST(Integrate, EndpointSingularityUsesGaps) {
  // (1 - x)^{-1/2} near x = 1 is only accurate through the gap
  auto f = [](const Abscissa& a) { return 1 / std::sqrt(a.gaps.from_hi); };
  EXPECT_NEAR(integrate(f, 0, 1).value, 2.0, 1e-12);
}

TEST(Integrate, DivergentIntegrandIsReported) {
  EXPECT_THROW(integrate([](double x) { return 1 / x; }, 0, 1), NonIntegrable);
  EXPECT_THROW(integrate([](double) { return 1.0; }, 0, INFINITY), NonIntegrable);
}

TEST(InnerProduct, Examples) {
  const auto h = make(CaseId::One, "-2", "0");
  const auto one = [](double) { return 1.0; };
  const auto id = [](double s) { return s; };
  EXPECT_NEAR(inner_product(h, one, one).value, 1.7724539, 1e-7);
  EXPECT_NEAR(inner_product(h, one, id).value, 0.0, 1e-15);

  const auto m = make(CaseId::S2, "-9", "2");
  const Polynomial p1 = poly_coeffs(m, 1);
  const auto r = inner_product(m, one, [&](double s) { return p1(s); });
  EXPECT_LE(std::abs(r.value), std::max(2 * r.abs_error_estimate, 1e-13 * r.l1_norm));
}

TEST(InnerProduct, Symmetric) {
  const auto p = make(CaseId::OneMinusS2, "-5", "1");
  const auto f = [](double s) { return 1 + s * s * s; };
  const auto g = [](double s) { return std::cos(s); };
  EXPECT_EQ(inner_product(p, f, g).value, inner_product(p, g, f).value);
}

TEST(GramMatrix, HermiteLike) {
  const GramMatrix g = gram_matrix(make(CaseId::One, "-2", "0"), 0, 3);
  ASSERT_EQ(g.values.size(), 4u);
  double dmax = 0;
  for (int i = 0; i < 4; ++i) dmax = std::max(dmax, g.values[i][i]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) EXPECT_LT(std::abs(g.values[i][j]), 1e-8 * dmax);
  // ||Phi_l||^2 = sqrt(pi) l! / 2^l for monic Hermite
  EXPECT_NEAR(g.values[3][3], std::sqrt(M_PI) * 6 / 8, 1e-12);
}

TEST(GramMatrix, SingleEntryAndScarf) {
  const auto m = make(CaseId::S2, "-9", "2");
  const GramMatrix one = gram_matrix(m, 2, 2);
  ASSERT_EQ(one.values.size(), 1u);
  EXPECT_GT(one.values[0][0], 0.0);

  const GramMatrix sc = gram_matrix(make(CaseId::S2PlusOne, "-7", "1"), 1, 2);
  EXPECT_LT(sc.max_relative_offdiagonal(), 1e-8);
  EXPECT_THROW(gram_matrix(m, 0, 5), IndexAboveCutoff);
}

TEST(GramMatrix, OrthogonalForAllFamiliesAndLevels) {
  for (const auto& f : standard_families()) {
    const int lmax = f.params.cutoff().is_infinite() ? 7 : std::min(*f.params.cutoff().count(), 8) - 1;
    for (int m = 0; m <= 2 && m <= lmax; ++m) {
      EXPECT_LT(gram_matrix(f.params, m, lmax).max_relative_offdiagonal(), 1e-8) << f.name << " m=" << m;
    }
  }
}

TEST(GramMatrix, Csv) {
  const GramMatrix g = gram_matrix(make(CaseId::One, "-2", "0"), 1, 2);
  const std::string csv = g.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "l\\k,1,2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}
