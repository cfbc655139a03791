#include "hyperorth/schroedinger.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hyperorth/errors.hpp"
#include "hyperorth/ladder.hpp"

namespace hyperorth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_x(const ChangeOfVariable& cv, double x) {
  if (!cv.x_interval.contains(x)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside (" << cv.x_interval.lo << ", " << cv.x_interval.hi << ")";
    throw DomainError(msg.str());
  }
}

// sigma, sigma', tau at s(x), with sigma taken from the endpoint gaps.
struct PointData {
  double s;
  double sigma;
  double dsigma;
  double tau;
  bool saturated;
};

PointData point_data(const ProblemParams& p, const ChangeOfVariable& cv, double x) {
  PointData d{};
  d.s = cv.s_of_x(x);
  const Gaps g = cv.gaps(x);
  d.sigma = sigma_from_gaps(p, d.s, g);
  d.dsigma = p.dsigma_at(d.s);
  d.tau = p.tau_at(d.s);
  d.saturated = !std::isfinite(d.s) || !(d.sigma > 0.0) || !std::isfinite(d.sigma) ||
                (p.interval().lo_finite() && !(g.from_lo > 0.0)) || (p.interval().hi_finite() && !(g.from_hi > 0.0));
  return d;
}

// log of sqrt(kappa rho) kappa^m at x; NaN when saturated.
double log_prefactor(const ProblemParams& p, const ChangeOfVariable& cv, int m, double x, const PointData& d) {
  if (d.saturated) return std::numeric_limits<double>::quiet_NaN();
  const double lw = log_weight_rho(p, d.s, cv.gaps(x));
  return 0.5 * lw + (m + 0.5) * 0.5 * std::log(d.sigma);
}

double w_from_point(int m, const PointData& d) {
  return -(2.0 * d.tau + (2.0 * m - 1.0) * d.dsigma) / (4.0 * std::sqrt(d.sigma));
}

}  // namespace

double ChangeOfVariable::s_of_x(double x) const {
  switch (case_id) {
    case CaseId::One: return x;
    case CaseId::S: return 0.25 * x * x;
    case CaseId::OneMinusS2: return std::cos(x);
    case CaseId::S2MinusOne: return std::cosh(x);
    case CaseId::S2: return std::exp(x);
    case CaseId::S2PlusOne: return std::sinh(x);
  }
  return x;
}

double ChangeOfVariable::ds_dx(double x) const {
  switch (case_id) {
    case CaseId::One: return 1.0;
    case CaseId::S: return 0.5 * x;
    case CaseId::OneMinusS2: return -std::sin(x);
    case CaseId::S2MinusOne: return std::sinh(x);
    case CaseId::S2: return std::exp(x);
    case CaseId::S2PlusOne: return std::cosh(x);
  }
  return 1.0;
}

Gaps ChangeOfVariable::gaps(double x) const {
  switch (case_id) {
    case CaseId::One: return {kInf, kInf};
    case CaseId::S: return {0.25 * x * x, kInf};
    case CaseId::OneMinusS2: {
      const double c = std::cos(0.5 * x), s = std::sin(0.5 * x);
      return {2.0 * c * c, 2.0 * s * s};
    }
    case CaseId::S2MinusOne: {
      const double sh = std::sinh(0.5 * x);
      return {2.0 * sh * sh, kInf};
    }
    case CaseId::S2: return {std::exp(x), kInf};
    case CaseId::S2PlusOne: return {kInf, kInf};
  }
  return {kInf, kInf};
}

double ChangeOfVariable::x_of_s(double s) const {
  switch (case_id) {
    case CaseId::One: return s;
    case CaseId::S: return 2.0 * std::sqrt(s);
    case CaseId::OneMinusS2: return std::acos(s);
    case CaseId::S2MinusOne: return std::acosh(s);
    case CaseId::S2: return std::log(s);
    case CaseId::S2PlusOne: return std::asinh(s);
  }
  return s;
}

ChangeOfVariable change_of_variable(CaseId c) {
  switch (c) {
    case CaseId::One: return {c, {-kInf, kInf}, +1};
    case CaseId::S: return {c, {0.0, kInf}, +1};
    case CaseId::OneMinusS2: return {c, {0.0, std::numbers::pi}, -1};
    case CaseId::S2MinusOne: return {c, {0.0, kInf}, +1};
    case CaseId::S2: return {c, {-kInf, kInf}, +1};
    case CaseId::S2PlusOne: return {c, {-kInf, kInf}, +1};
  }
  return {c, {-kInf, kInf}, +1};
}

std::string_view family_name(PotentialFamily f) {
  switch (f) {
    case PotentialFamily::HarmonicLike: return "harmonic-like";
    case PotentialFamily::RadialLike: return "radial-like";
    case PotentialFamily::PoschlTeller: return "poschl-teller";
    case PotentialFamily::GenPoschlTeller: return "generalized-poschl-teller";
    case PotentialFamily::Morse: return "morse";
    case PotentialFamily::ScarfHyperbolic: return "scarf-hyperbolic";
  }
  return "?";
}

PotentialSpec potential_spec(const ProblemParams& p, int m) {
  PotentialFamily fam = PotentialFamily::HarmonicLike;
  switch (p.case_id()) {
    case CaseId::One: fam = PotentialFamily::HarmonicLike; break;
    case CaseId::S: fam = PotentialFamily::RadialLike; break;
    case CaseId::OneMinusS2: fam = PotentialFamily::PoschlTeller; break;
    case CaseId::S2MinusOne: fam = PotentialFamily::GenPoschlTeller; break;
    case CaseId::S2: fam = PotentialFamily::Morse; break;
    case CaseId::S2PlusOne: fam = PotentialFamily::ScarfHyperbolic; break;
  }
  const double a = p.alpha_d();
  return PotentialSpec{p,
                       m,
                       fam,
                       (1.0 - a - 2.0 * m) / 2.0,
                       (-1.0 - a + 2.0 * m) / 2.0,
                       -p.beta_d() / 2.0,
                       lambda(p, m).get_d()};
}

double PsiFunction::value(double x) const {
  const ChangeOfVariable cv = change_of_variable(params.case_id());
  require_x(cv, x);
  const PointData d = point_data(params, cv, x);
  if (d.saturated) return 0.0;
  const double lp = log_prefactor(params, cv, m, x, d);
  const double pref = std::exp(lp);
  if (pref == 0.0 || !std::isfinite(lp)) return 0.0;  // chi may overflow where the prefactor underflows
  return pref * chi(d.s);
}

double PsiFunction::derivative(double x) const {
  const ChangeOfVariable cv = change_of_variable(params.case_id());
  require_x(cv, x);
  const PointData d = point_data(params, cv, x);
  if (d.saturated) return 0.0;
  const double lp = log_prefactor(params, cv, m, x, d);
  const double pref = std::exp(lp);
  if (pref == 0.0 || !std::isfinite(lp)) return 0.0;
  // d/dx [sqrt(kappa rho) kappa^m chi] = sign * pref * (kappa chi' - W_m chi)
  const double kappa = std::sqrt(d.sigma);
  const double w = w_from_point(m, d);
  return cv.sign * pref * (kappa * chi.derivative()(d.s) - w * chi(d.s));
}

PsiFunction make_psi(const ProblemParams& p, long l, int m) {
  return PsiFunction{p, m, make_assoc(p, l, m).phi};
}

double psi_eval(const ProblemParams& p, long l, int m, double x) { return make_psi(p, l, m).value(x); }

double superpotential_W(const ProblemParams& p, int m, double x) {
  require_ladder_level(p, m);
  const ChangeOfVariable cv = change_of_variable(p.case_id());
  require_x(cv, x);
  return w_from_point(m, point_data(p, cv, x));
}

double superpotential_dW(const ProblemParams& p, int m, double x) {
  require_ladder_level(p, m);
  const ChangeOfVariable cv = change_of_variable(p.case_id());
  require_x(cv, x);
  const PointData d = point_data(p, cv, x);
  const double n = 2.0 * d.tau + (2.0 * m - 1.0) * d.dsigma;
  const double dn = 2.0 * p.alpha_d() + (2.0 * m - 1.0) * p.d2sigma();
  // kappa dW/ds = -N'/4 + N sigma' / (8 sigma)
  return cv.sign * (-0.25 * dn + n * d.dsigma / (8.0 * d.sigma));
}

double potential_V(const ProblemParams& p, int m, double x) {
  const int sign = change_of_variable(p.case_id()).sign;
  const double w = superpotential_W(p, m, x);
  const double dw = superpotential_dW(p, m, x);
  return w * w - sign * dw + lambda(p, m).get_d();
}

double closed_form_W(const ProblemParams& p, int m, double x) {
  require_ladder_level(p, m);
  require_x(change_of_variable(p.case_id()), x);
  const PotentialSpec ps = potential_spec(p, m);
  switch (ps.family) {
    case PotentialFamily::PoschlTeller:
      return ps.alpha_prime_m / std::tan(x) + ps.delta / std::sin(x);
    case PotentialFamily::GenPoschlTeller:
      return ps.alpha_m / std::tanh(x) + ps.delta / std::sinh(x);
    case PotentialFamily::Morse: return ps.alpha_m + ps.delta * std::exp(-x);
    case PotentialFamily::ScarfHyperbolic: return ps.alpha_m * std::tanh(x) + ps.delta / std::cosh(x);
    default: return superpotential_W(p, m, x);
  }
}

double closed_form_V(const ProblemParams& p, int m, double x) {
  require_ladder_level(p, m);
  require_x(change_of_variable(p.case_id()), x);
  const PotentialSpec ps = potential_spec(p, m);
  const double am = ps.alpha_m, ap = ps.alpha_prime_m, dl = ps.delta, lam = ps.lambda_m;
  switch (ps.family) {
    case PotentialFamily::PoschlTeller: {
      const double csc = 1.0 / std::sin(x), cot = 1.0 / std::tan(x);
      // Cross term carries alpha'_m (not alpha_m): it is what W^2 + W' produces.
      return (ap * ap - ap + dl * dl) * csc * csc + (2.0 * ap - 1.0) * dl * cot * csc - ap * ap + lam;
    }
    case PotentialFamily::GenPoschlTeller: {
      const double csch = 1.0 / std::sinh(x), coth = 1.0 / std::tanh(x);
      return (am * am + am + dl * dl) * csch * csch + (2.0 * am + 1.0) * dl * coth * csch + am * am + lam;
    }
    case PotentialFamily::Morse:
      return dl * dl * std::exp(-2.0 * x) + (2.0 * am + 1.0) * dl * std::exp(-x) + am * am + lam;
    case PotentialFamily::ScarfHyperbolic: {
      const double sech = 1.0 / std::cosh(x), th = std::tanh(x);
      return (-am * am - am + dl * dl) * sech * sech + (2.0 * am + 1.0) * dl * th * sech + am * am + lam;
    }
    default: return potential_V(p, m, x);
  }
}

double potential_threshold(const ProblemParams& p, int m) {
  switch (p.case_id()) {
    case CaseId::S2MinusOne:
    case CaseId::S2:
    case CaseId::S2PlusOne: {
      const PotentialSpec ps = potential_spec(p, m);
      return ps.alpha_m * ps.alpha_m + ps.lambda_m;
    }
    default: return kInf;
  }
}

double ladder_x(const ProblemParams& p, int m, LadderDirection dir, const PsiFunction& f, double x) {
  const int sign = change_of_variable(p.case_id()).sign;
  const int d = dir == LadderDirection::Raise ? sign : -sign;
  return d * f.derivative(x) + superpotential_W(p, m, x) * f.value(x);
}

double ladder_x(const ProblemParams& p, int m, LadderDirection dir, const std::function<double(double)>& f,
                double x) {
  const int sign = change_of_variable(p.case_id()).sign;
  const int d = dir == LadderDirection::Raise ? sign : -sign;
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  const double df = (f(x + h) - f(x - h)) / (2.0 * h);
  return d * df + superpotential_W(p, m, x) * f(x);
}

std::vector<double> ladder_x(const ProblemParams& p, int m, LadderDirection dir, std::span<const double> grid,
                             std::span<const double> values) {
  const std::size_t n = grid.size();
  if (n < 3 || values.size() != n) throw DomainError("grid ladder needs >= 3 samples with matching values");
  const double h = (grid[n - 1] - grid[0]) / static_cast<double>(n - 1);
  const int sign = change_of_variable(p.case_id()).sign;
  const int d = dir == LadderDirection::Raise ? sign : -sign;

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double df;
    if (i == 0) df = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
    else if (i == n - 1) df = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h);
    else df = (values[i + 1] - values[i - 1]) / (2.0 * h);
    out[i] = d * df + superpotential_W(p, m, grid[i]) * values[i];
  }
  return out;
}

std::vector<double> build_psi_from_top(const ProblemParams& p, long l, int m, std::span<const double> grid) {
  if (m < 0 || m >= l) {
    throw IndexError("top-down construction needs 0 <= m < l, got l = " + std::to_string(l) +
                     ", m = " + std::to_string(m));
  }
  p.require_index(l);

  // Level m + 1 polynomial part via the s-space chain; Psi_{l,l} has chi = l!.
  const AssocFunction upper = (m + 1 == l) ? make_assoc(p, l, static_cast<int>(l)) : build_from_top(p, l, m + 1);
  const PsiFunction f{p, m + 1, upper.phi};
  const double gap = Rational(lambda(p, l) - lambda(p, m)).get_d();

  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(ladder_x(p, m, LadderDirection::Lower, f, x) / gap);
  return out;
}

}  // namespace hyperorth
