#include <cmath>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hyperorth/catalog.hpp"
#include "hyperorth/checks.hpp"
#include "hyperorth/errors.hpp"
#include "hyperorth/quadrature.hpp"
#include "hyperorth/schroedinger.hpp"

using namespace hyperorth;
using hyperorth::testing::make;

TEST(ChangeOfVariable, Examples) {
  const auto pt = change_of_variable(CaseId::OneMinusS2);
  EXPECT_EQ(pt.sign, -1);
  EXPECT_EQ(pt.x_interval.lo, 0.0);
  EXPECT_DOUBLE_EQ(pt.x_interval.hi, M_PI);
  EXPECT_DOUBLE_EQ(pt.s_of_x(0.4), std::cos(0.4));
  EXPECT_DOUBLE_EQ(pt.ds_dx(0.4), -std::sin(0.4));

  const auto mo = change_of_variable(CaseId::S2);
  EXPECT_DOUBLE_EQ(mo.s_of_x(0.3), std::exp(0.3));
  EXPECT_DOUBLE_EQ(mo.ds_dx(0.3), mo.s_of_x(0.3));

  const auto id = change_of_variable(CaseId::One);
  EXPECT_EQ(id.s_of_x(-1.25), -1.25);
}

TEST(ChangeOfVariable, SpeedIsKappa) {
  for (const auto& f : standard_families()) {
    const auto cv = change_of_variable(f.params.case_id());
    for (double x : sample_x_grid(f.params, 7)) {
      const double h = 1e-4, s = cv.s_of_x(x);
      const double fd = (cv.s_of_x(x + h) - cv.s_of_x(x - h)) / (2 * h);
      const double kappa = std::sqrt(f.params.sigma_at(s));
      EXPECT_NEAR(std::abs(fd), kappa, 1e-8 * std::max(1.0, kappa)) << f.name;
      EXPECT_NEAR(cv.ds_dx(x), cv.sign * kappa, 1e-12 * std::max(1.0, kappa)) << f.name;
      EXPECT_NEAR(cv.x_of_s(s), x, 1e-12 * std::max(1.0, std::abs(x))) << f.name;
      EXPECT_TRUE(f.params.interval().contains(s));
    }
  }
}

TEST(ChangeOfVariable, GapsNearFiniteEnds) {
  const auto pt = change_of_variable(CaseId::OneMinusS2);
  const Gaps g = pt.gaps(1e-9);  // s = cos x rounds to 1
  EXPECT_NEAR(g.from_hi, 5e-19, 1e-30);
  EXPECT_NEAR(g.from_lo, 2.0, 1e-15);
  EXPECT_NEAR(change_of_variable(CaseId::S2MinusOne).gaps(1e-8).from_lo, 5e-17, 1e-28);
}

TEST(PsiEval, Examples) {
  EXPECT_DOUBLE_EQ(psi_eval(make(CaseId::One, "-2", "0"), 0, 0, 0.0), 1.0);
  EXPECT_NEAR(psi_eval(make(CaseId::S2, "-9", "2"), 0, 0, 0.0), std::exp(-1.0), 1e-15);
  EXPECT_THROW(psi_eval(make(CaseId::OneMinusS2, "-5", "1"), 0, 0, 0.0), DomainError);
  EXPECT_THROW(psi_eval(make(CaseId::S2, "-9", "2"), 5, 0, 0.0), IndexAboveCutoff);
  // saturated tails give zero, not NaN
  EXPECT_EQ(psi_eval(make(CaseId::S2, "-9", "2"), 2, 0, 800.0), 0.0);
  EXPECT_EQ(psi_eval(make(CaseId::S2, "-9", "2"), 2, 0, -800.0), 0.0);
}

TEST(PsiEval, NormsTransferToXSpace) {
  for (const auto& f : standard_families()) {
    const auto cv = change_of_variable(f.params.case_id());
    const int limit = index_limit(f.params, 4);
    for (int m = 0; m < std::min(limit, 2); ++m) {
      for (int l = m; l < limit; ++l) {
        for (int k = l; k < limit; ++k) {
          const PsiFunction a = make_psi(f.params, l, m), b = make_psi(f.params, k, m);
          const auto x = integrate([&](double t) { return a.value(t) * b.value(t); }, cv.x_interval.lo, cv.x_interval.hi);
          const double s = inner_product(make_assoc(f.params, l, m), make_assoc(f.params, k, m)).value;
          const double scale = std::sqrt(inner_product(make_assoc(f.params, l, m), make_assoc(f.params, l, m)).value *
                                         inner_product(make_assoc(f.params, k, m), make_assoc(f.params, k, m)).value);
          EXPECT_NEAR(x.value, s, 1e-8 * scale) << f.name << " l=" << l << " k=" << k << " m=" << m;
        }
      }
    }
  }
}

TEST(Superpotential, Examples) {
  const auto mo = make(CaseId::S2, "-9", "2");
  const auto h = make(CaseId::One, "-2", "0");
  const auto sc = make(CaseId::S2PlusOne, "-7", "1");
  for (double x : {-1.0, 0.0, 0.7, 3.0}) {
    EXPECT_NEAR(superpotential_W(mo, 0, x), 5 - std::exp(-x), 1e-13);
    for (int m = 0; m < 3; ++m) EXPECT_NEAR(superpotential_W(h, m, x), x, 1e-15);
    EXPECT_NEAR(superpotential_W(sc, 0, x), 4 * std::tanh(x) - 0.5 / std::cosh(x), 1e-13);
    EXPECT_NEAR(potential_V(mo, 0, x), std::exp(-2 * x) - 11 * std::exp(-x) + 25, 1e-12 * (1 + std::exp(-2 * x)));
    EXPECT_NEAR(potential_V(h, 0, x), x * x - 1, 1e-13);
  }
  EXPECT_THROW(superpotential_W(mo, 4, 0.0), IndexAboveCutoff);
}

TEST(Superpotential, PoschlTellerClosedForms) {
  // alpha'_m multiplies the cross term; W in half-angle form uses delta
  const auto p = make(CaseId::OneMinusS2, "-5", "1");
  for (int m = 0; m < 3; ++m) {
    const PotentialSpec s = potential_spec(p, m);
    EXPECT_EQ(s.family, PotentialFamily::PoschlTeller);
    for (double x : {0.2, 1.0, 2.0, 3.0}) {
      const double w = superpotential_W(p, m, x);
      EXPECT_NEAR(closed_form_W(p, m, x), w, 1e-12 * std::max(1.0, std::abs(w)));
      const double half = (s.alpha_prime_m + s.delta) / 2 / std::tan(x / 2) - (s.alpha_prime_m - s.delta) / 2 * std::tan(x / 2);
      EXPECT_NEAR(half, w, 1e-12 * std::max(1.0, std::abs(w)));
      const double v = potential_V(p, m, x);
      EXPECT_NEAR(closed_form_V(p, m, x), v, 1e-11 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST(Superpotential, ClosedFormsOfNamedFamilies) {
  for (const auto& f : standard_families()) {
    for (int m = 0; m <= 2 && f.params.cutoff().admits(m + 1); ++m) {
      for (double x : sample_x_grid(f.params, 9)) {
        const double v = potential_V(f.params, m, x);
        EXPECT_NEAR(closed_form_V(f.params, m, x), v, 1e-11 * std::max(1.0, std::abs(v))) << f.name;
      }
    }
  }
}

TEST(Superpotential, Thresholds) {
  EXPECT_DOUBLE_EQ(potential_threshold(make(CaseId::S2, "-9", "2"), 0), 25.0);
  EXPECT_DOUBLE_EQ(potential_threshold(make(CaseId::S2MinusOne, "-8", "12"), 0), 20.25);
  EXPECT_DOUBLE_EQ(potential_threshold(make(CaseId::S2PlusOne, "-7", "1"), 0), 16.0);
  EXPECT_TRUE(std::isinf(potential_threshold(make(CaseId::One, "-2", "0"), 0)));
  // every level shares the threshold nu^2
  EXPECT_DOUBLE_EQ(potential_threshold(make(CaseId::S2, "-9", "2"), 2), 25.0);
}

TEST(Riccati, IdentitiesForEveryFamily) {
  for (const auto& f : standard_families()) {
    const int limit = index_limit(f.params, 6);
    EXPECT_TRUE(check_riccati(f.params).pass) << f.name;
    EXPECT_TRUE(check_ground_state(f.params).pass) << f.name;
    EXPECT_TRUE(check_susy_pairing(f.params, limit).pass) << f.name;
  }
}

TEST(LadderX, HarmonicRaise) {
  const auto h = make(CaseId::One, "-2", "0");
  const PsiFunction lo = make_psi(h, 1, 0), hi = make_psi(h, 1, 1);
  for (double x : {-2.0, -0.5, 0.0, 0.9, 2.2}) {
    EXPECT_NEAR(ladder_x(h, 0, LadderDirection::Raise, lo, x), hi.value(x), 1e-8);
  }
}

TEST(LadderX, GroundStateAnnihilated) {
  for (const auto& f : standard_families()) {
    for (int m = 0; m <= 2 && f.params.cutoff().admits(m + 1); ++m) {
      const PsiFunction g = make_psi(f.params, m, m);
      for (double x : sample_x_grid(f.params, 10)) {
        const double scale = std::abs(g.derivative(x)) + std::abs(g.value(x));
        EXPECT_LT(std::abs(ladder_x(f.params, m, LadderDirection::Raise, g, x)), 1e-12 * scale) << f.name;
      }
    }
  }
}

TEST(LadderX, MorseLower) {
  const auto mo = make(CaseId::S2, "-9", "2");
  const PsiFunction hi = make_psi(mo, 1, 1), lo = make_psi(mo, 1, 0);
  const auto grid = sample_x_grid(mo, 10);
  double diff = 0, scale = 0;
  for (double x : grid) {
    diff = std::max(diff, std::abs(ladder_x(mo, 0, LadderDirection::Lower, hi, x) - 9 * lo.value(x)));
    scale = std::max(scale, std::abs(9 * lo.value(x)));
  }
  EXPECT_LT(diff, 1e-7 * scale);
}

TEST(LadderX, CallableAndGridForms) {
  const auto p = make(CaseId::S2PlusOne, "-7", "1");
  const PsiFunction lo = make_psi(p, 2, 0), hi = make_psi(p, 2, 1);
  const std::function<double(double)> f = [&](double x) { return lo.value(x); };
  for (double x : {-1.0, 0.3, 1.4}) {
    EXPECT_NEAR(ladder_x(p, 0, LadderDirection::Raise, f, x), hi.value(x), 1e-7);
  }
  std::vector<double> grid, vals;
  for (int i = 0; i <= 4000; ++i) {
    grid.push_back(-4 + 8.0 * i / 4000);
    vals.push_back(lo.value(grid.back()));
  }
  const auto up = ladder_x(p, 0, LadderDirection::Raise, grid, vals);
  for (std::size_t i = 0; i < grid.size(); i += 400) EXPECT_NEAR(up[i], hi.value(grid[i]), 1e-4);
  EXPECT_THROW(ladder_x(p, 0, LadderDirection::Raise, std::vector<double>{0, 1}, std::vector<double>{0, 1}),
               DomainError);
}

TEST(BuildPsiFromTop, Examples) {
  const auto h = make(CaseId::One, "-2", "0");
  const std::vector<double> grid = {-1.5, -0.2, 0.4, 1.7};
  const auto one = build_psi_from_top(h, 1, 0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(one[i], psi_eval(h, 1, 0, grid[i]), 1e-12);

  const auto mo = make(CaseId::S2, "-9", "2");
  const auto xs = sample_x_grid(mo, 20);
  const auto chain = build_psi_from_top(mo, 4, 0, xs);
  double diff = 0, scale = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ref = psi_eval(mo, 4, 0, xs[i]);
    diff = std::max(diff, std::abs(chain[i] - ref));
    scale = std::max(scale, std::abs(ref));
  }
  EXPECT_LT(diff, 1e-6 * scale);
  EXPECT_THROW(build_psi_from_top(mo, 2, 2, xs), IndexError);
}

TEST(PotentialSpec, Constants) {
  const PotentialSpec s = potential_spec(make(CaseId::S2, "-9", "2"), 0);
  EXPECT_EQ(s.family, PotentialFamily::Morse);
  EXPECT_DOUBLE_EQ(s.alpha_m, 5.0);
  EXPECT_DOUBLE_EQ(s.delta, -1.0);
  EXPECT_EQ(family_name(potential_spec(make(CaseId::S2PlusOne, "-7", "1"), 0).family), "scarf-hyperbolic");
}
