#include "hyperorth/assoc.hpp"

#include <cmath>
#include <sstream>

#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"

namespace hyperorth {

void require_inside(const ProblemParams& p, double s) {
  const Interval& iv = p.interval();
  if (!iv.contains(s) || !(p.sigma_at(s) > 0.0)) {
    std::ostringstream msg;
    msg << "s = " << s << " outside (" << iv.lo << ", " << iv.hi << ") for sigma(s) = " << sigma_text(p.case_id());
    throw DomainError(msg.str());
  }
}

AssocFunction make_assoc(const ProblemParams& p, long l, int m) {
  if (m < 0 || m > l) {
    throw IndexError("associated function needs 0 <= m <= l, got l = " + std::to_string(l) +
                     ", m = " + std::to_string(m));
  }
  return AssocFunction{p, l, m, poly_coeffs(p, l).derivative(m)};
}

AssocFunction make_level_function(const ProblemParams& p, int m, Polynomial phi) {
  if (m < 0) throw IndexError("level m must be non-negative");
  return AssocFunction{p, AssocFunction::kGenericIndex, m, std::move(phi)};
}

double assoc_eval(const AssocFunction& f, double s) {
  require_inside(f.params, s);
  const double sigma = f.params.sigma_at(s);
  return std::pow(sigma, 0.5 * f.m) * f.phi(s);
}

Jet assoc_jet(const AssocFunction& f, double s) {
  const ProblemParams& p = f.params;
  const double sg = p.sigma_at(s);
  const double s1 = p.dsigma_at(s);
  const double s2 = p.d2sigma();
  const double q = 0.5 * f.m;

  // g = sigma^q and its derivatives (sigma''' = 0).
  const double g = std::pow(sg, q);
  const double g1 = q * std::pow(sg, q - 1) * s1;
  const double g2 = q * (q - 1) * std::pow(sg, q - 2) * s1 * s1 + q * std::pow(sg, q - 1) * s2;
  const double g3 = q * (q - 1) * (q - 2) * std::pow(sg, q - 3) * s1 * s1 * s1 +
                    3.0 * q * (q - 1) * std::pow(sg, q - 2) * s1 * s2;

  const Polynomial d1 = f.phi.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial d3 = d2.derivative();
  const double ph = f.phi(s), ph1 = d1(s), ph2 = d2(s), ph3 = d3(s);

  Jet j;
  j.v = g * ph;
  j.d1 = g1 * ph + g * ph1;
  j.d2 = g2 * ph + 2.0 * g1 * ph1 + g * ph2;
  j.d3 = g3 * ph + 3.0 * g2 * ph1 + 3.0 * g1 * ph2 + g * ph3;
  return j;
}

Jet fd_jet(const std::function<double(double)>& f, double s) {
  const double h = 1e-5 * std::max(1.0, std::abs(s));
  const double fp = f(s + h);
  const double f0 = f(s);
  const double fm = f(s - h);
  Jet j;
  j.v = f0;
  j.d1 = (fp - fm) / (2.0 * h);
  j.d2 = (fp - 2.0 * f0 + fm) / (h * h);
  return j;
}

Jet apply_H_jet(const ProblemParams& p, int m, double s, const Jet& f) {
  const LocalGeometry g = local_geometry(p, s);
  const double mm = m * (m - 2);
  const double c = 0.25 * mm * g.dsigma * g.dsigma / g.sigma + 0.5 * m * g.tau * g.dsigma / g.sigma -
                   0.5 * mm * g.d2sigma - m * g.dtau;
  const double sig2 = g.sigma * g.sigma;
  const double dc = 0.25 * mm * (2.0 * g.dsigma * g.d2sigma * g.sigma - g.dsigma * g.dsigma * g.dsigma) / sig2 +
                    0.5 * m * ((g.dtau * g.dsigma + g.tau * g.d2sigma) * g.sigma - g.tau * g.dsigma * g.dsigma) / sig2;

  Jet out;
  out.v = -g.sigma * f.d2 - g.tau * f.d1 + c * f.v;
  out.d1 = -g.dsigma * f.d2 - g.sigma * f.d3 - g.dtau * f.d1 - g.tau * f.d2 + dc * f.v + c * f.d1;
  return out;
}

Jet apply_A_jet(const ProblemParams& p, int m, double s, const Jet& f) {
  const LocalGeometry g = local_geometry(p, s);
  Jet out;
  out.v = g.kappa * f.d1 - m * g.dkappa * f.v;
  out.d1 = g.dkappa * f.d1 + g.kappa * f.d2 - m * g.d2kappa * f.v - m * g.dkappa * f.d1;
  return out;
}

Jet apply_Aplus_jet(const ProblemParams& p, int m, double s, const Jet& f) {
  const LocalGeometry g = local_geometry(p, s);
  const double t_over_k = g.tau / g.kappa;
  const double d_t_over_k = g.dtau / g.kappa - g.tau * g.dkappa / g.sigma;
  Jet out;
  out.v = -g.kappa * f.d1 - t_over_k * f.v - (m - 1) * g.dkappa * f.v;
  out.d1 = -g.dkappa * f.d1 - g.kappa * f.d2 - d_t_over_k * f.v - t_over_k * f.d1 -
           (m - 1) * (g.d2kappa * f.v + g.dkappa * f.d1);
  return out;
}

double apply_Hm(const ProblemParams& p, int m, const AssocFunction& f, double s) {
  p.require_index(m);
  require_inside(p, s);
  return apply_H_jet(p, m, s, assoc_jet(f, s)).v;
}

double apply_Hm(const ProblemParams& p, int m, const std::function<double(double)>& f, double s) {
  p.require_index(m);
  require_inside(p, s);
  return apply_H_jet(p, m, s, fd_jet(f, s)).v;
}

double recurrence_residual(const ProblemParams& p, long l, int m, double s) {
  if (m < 1 || m > l) {
    throw IndexError("recurrence needs 1 <= m <= l, got l = " + std::to_string(l) + ", m = " + std::to_string(m));
  }
  require_inside(p, s);
  const LocalGeometry g = local_geometry(p, s);
  const double coef = g.tau / g.kappa + 2.0 * (m - 1) * g.dkappa;
  const double gap = Rational(lambda(p, l) - lambda(p, m - 1)).get_d();
  const double here = assoc_eval(make_assoc(p, l, m), s);
  const double below = assoc_eval(make_assoc(p, l, m - 1), s);
  if (m == l) return coef * here + gap * below;
  const double above = assoc_eval(make_assoc(p, l, m + 1), s);
  return above + coef * here + gap * below;
}

}  // namespace hyperorth
