#include "hyperorth/generation.hpp"

#include <cassert>

#include "hyperorth/errors.hpp"

namespace hyperorth {

Polynomial poly_coeffs(const ProblemParams& p, long l) {
  p.require_index(l);
  const auto [a, b, c] = p.sigma();
  const Rational lam = lambda(p, l);
  const Rational& alpha = p.alpha();
  const Rational& beta = p.beta();

  // Coefficient of s^k in sigma y'' + tau y' + lambda y:
  //   [a k(k-1) + alpha k + lambda] c_k + [b (k+1) k + beta (k+1)] c_{k+1}
  //   + c (k+2)(k+1) c_{k+2} = 0
  std::vector<Rational> coef(static_cast<std::size_t>(l) + 3);
  coef[static_cast<std::size_t>(l)] = 1;
  for (long k = l - 1; k >= 0; --k) {
    const Rational diag = Rational(a * k * (k - 1)) + alpha * k + lam;
    // lambda_l - lambda_k, nonzero below the cutoff.
    assert(diag != 0);
    const auto ku = static_cast<std::size_t>(k);
    Rational rhs = -(Rational(b * (k + 1) * k) + beta * (k + 1)) * coef[ku + 1];
    rhs -= Rational(c * (k + 2) * (k + 1)) * coef[ku + 2];
    coef[ku] = rhs / diag;
  }
  coef.resize(static_cast<std::size_t>(l) + 1);
  return Polynomial(std::move(coef));
}

Polynomial rodrigues_coeffs(const ProblemParams& p, long l) {
  p.require_index(l);
  const Polynomial sigma = p.sigma_poly();
  const Polynomial dsigma = sigma.derivative();
  const Polynomial tau = p.tau_poly();

  Polynomial q = Polynomial::constant(1);
  for (long j = 0; j < l; ++j) {
    q = sigma * q.derivative() + (Rational(l - j - 1) * dsigma + tau) * q;
  }
  return q.monic();
}

Polynomial ode_residual(const ProblemParams& p, const Polynomial& y, const Rational& lam) {
  return p.sigma_poly() * y.derivative(2) + p.tau_poly() * y.derivative() + lam * y;
}

ThreeTerm three_term_coeffs(const ProblemParams& p, long l) {
  if (l < 1) throw IndexError("three-term recurrence needs l >= 1");
  p.require_index(l + 1);
  const Polynomial prev = poly_coeffs(p, l - 1);
  const Polynomial cur = poly_coeffs(p, l);
  const Polynomial next = poly_coeffs(p, l + 1);

  // r = s Phi_l - Phi_{l+1} has degree <= l; match s^l then s^{l-1}.
  const Polynomial r = Polynomial::monomial(1) * cur - next;
  ThreeTerm tt;
  tt.beta = r.coeff(static_cast<int>(l));  // Phi_l is monic
  const Polynomial rest = r - tt.beta * cur;
  tt.gamma = rest.coeff(static_cast<int>(l - 1));  // Phi_{l-1} is monic
  return tt;
}

Polynomial three_term_residual(const ProblemParams& p, long l, const ThreeTerm& tt) {
  return Polynomial::monomial(1) * poly_coeffs(p, l) - poly_coeffs(p, l + 1) - tt.beta * poly_coeffs(p, l) -
         tt.gamma * poly_coeffs(p, l - 1);
}

}  // namespace hyperorth
