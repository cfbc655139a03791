#pragma once

#include <vector>

#include "hyperorth/family.hpp"
#include "hyperorth/polynomial.hpp"

namespace hyperorth {

/// Monic degree-l polynomial solution Phi_l of
///   sigma y'' + tau y' + lambda_l y = 0
/// obtained by the downward coefficient recursion seeded with c_l = 1.
/// Throws IndexAboveCutoff when l is not below nu.
Polynomial poly_coeffs(const ProblemParams& p, long l);

/// Same polynomial built independently from the Rodrigues representation
/// d^l/ds^l [sigma^l rho] / rho, expanded symbolically as
///   Q_0 = 1,  Q_{j+1} = sigma Q_j' + ((l - j - 1) sigma' + tau) Q_j,
/// then made monic.
Polynomial rodrigues_coeffs(const ProblemParams& p, long l);

/// sigma y'' + tau y' + lambda y as an exact polynomial.
Polynomial ode_residual(const ProblemParams& p, const Polynomial& y, const Rational& lam);

/// Coefficients of s Phi_l = Phi_{l+1} + beta_l Phi_l + gamma_l Phi_{l-1}
/// for the monic family (the leading recurrence coefficient is 1).
struct ThreeTerm {
  Rational beta;
  Rational gamma;
};

/// Requires 1 <= l and l + 1 < nu.
ThreeTerm three_term_coeffs(const ProblemParams& p, long l);

/// s Phi_l - Phi_{l+1} - beta_l Phi_l - gamma_l Phi_{l-1}; identically zero.
Polynomial three_term_residual(const ProblemParams& p, long l, const ThreeTerm& tt);

/// Real roots of Phi_l in ascending order (companion matrix, then a Newton polish).
std::vector<double> zeros(const ProblemParams& p, long l);

/// Roots of an arbitrary polynomial with only simple real roots; used by zeros().
std::vector<double> real_roots(const Polynomial& poly);

}  // namespace hyperorth
