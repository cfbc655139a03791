#include "hyperorth/ladder.hpp"

#include <cmath>

#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"

namespace hyperorth {

void require_ladder_level(const ProblemParams& p, int m) {
  if (m < 0) throw IndexError("ladder level m must be non-negative");
  if (!p.cutoff().admits(m + 1)) {
    throw IndexAboveCutoff("ladder operators A_" + std::to_string(m) + " need m + 1 < nu = " + p.cutoff().to_string());
  }
}

AssocFunction apply_A(const AssocFunction& f) {
  return AssocFunction{f.params, f.l, f.m + 1, f.phi.derivative()};
}

AssocFunction apply_Aplus(const AssocFunction& f) {
  if (f.m < 1) throw IndexError("A^+_m needs an input at level m + 1 >= 1");
  const int m = f.m - 1;
  const ProblemParams& p = f.params;
  const Polynomial sigma = p.sigma_poly();
  const Polynomial phi =
      -(sigma * f.phi.derivative()) - (Rational(m) * sigma.derivative() + p.tau_poly()) * f.phi;
  return AssocFunction{p, f.l, m, phi};
}

AssocFunction build_from_top(const ProblemParams& p, long l, int m) {
  if (m < 0 || m >= l) {
    throw IndexError("top-down construction needs 0 <= m < l, got l = " + std::to_string(l) +
                     ", m = " + std::to_string(m));
  }
  p.require_index(l);

  // Phi_{l,l} = kappa^l d^l Phi_l / ds^l with monic Phi_l: polynomial part l!.
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(l));
  AssocFunction f{p, l, static_cast<int>(l), Polynomial::constant(Rational(fact))};

  const Rational lam_l = lambda(p, l);
  for (long j = l - 1; j >= m; --j) {
    f = apply_Aplus(f);
    f.phi = f.phi / (lam_l - lambda(p, j));
  }
  return f;
}

std::vector<double> norm_chain(const ProblemParams& p, long l, const QuadratureOptions& opt) {
  p.require_index(l);
  std::vector<double> norms;
  for (int m = 0; m <= l; ++m) {
    const AssocFunction f = make_assoc(p, l, m);
    norms.push_back(std::sqrt(inner_product(f, f, opt).value));
  }
  return norms;
}

std::pair<double, double> factorization_residual(const ProblemParams& p, int m, const AssocFunction& f, double s) {
  require_ladder_level(p, m);
  require_inside(p, s);
  const double lam_m = lambda(p, m).get_d();

  const AssocFunction lower = make_level_function(p, m, f.phi);
  const Jet jl = assoc_jet(lower, s);
  const double lhs1 = apply_H_jet(p, m, s, jl).v - lam_m * jl.v;
  const double rhs1 = apply_Aplus_jet(p, m, s, apply_A_jet(p, m, s, jl)).v;

  const AssocFunction upper = make_level_function(p, m + 1, f.phi);
  const Jet ju = assoc_jet(upper, s);
  const double lhs2 = apply_H_jet(p, m + 1, s, ju).v - lam_m * ju.v;
  const double rhs2 = apply_A_jet(p, m, s, apply_Aplus_jet(p, m, s, ju)).v;

  return {lhs1 - rhs1, lhs2 - rhs2};
}

std::pair<double, double> intertwine_residual(const ProblemParams& p, int m, const AssocFunction& f, double s) {
  require_ladder_level(p, m);
  require_inside(p, s);

  const AssocFunction upper = make_level_function(p, m + 1, f.phi);
  const AssocFunction down = apply_Aplus(upper);  // level m
  const double lhs1 = apply_H_jet(p, m, s, assoc_jet(down, s)).v;
  const double rhs1 = apply_Aplus_jet(p, m, s, apply_H_jet(p, m + 1, s, assoc_jet(upper, s))).v;

  const AssocFunction up = apply_A(down);  // level m + 1
  const double lhs2 = apply_A_jet(p, m, s, apply_H_jet(p, m, s, assoc_jet(down, s))).v;
  const double rhs2 = apply_H_jet(p, m + 1, s, assoc_jet(up, s)).v;

  return {lhs1 - rhs1, lhs2 - rhs2};
}

}  // namespace hyperorth
