#pragma once

#include <functional>

#include "hyperorth/family.hpp"
#include "hyperorth/polynomial.hpp"

namespace hyperorth {

/// A function of the form kappa(s)^m * phi(s), kappa = sqrt(sigma).
///
/// When built by make_assoc() it is the associated special function
/// Phi_{l,m} = kappa^m d^m Phi_l / ds^m and `l` records the index. Functions that
/// are not tied to a particular Phi_l (ladder images of arbitrary polynomials,
/// test inputs) carry l = kGenericIndex.
struct AssocFunction {
  static constexpr long kGenericIndex = -1;

  ProblemParams params;
  long l;
  int m;
  Polynomial phi;

  bool is_zero() const { return phi.is_zero(); }
  bool is_generic() const { return l == kGenericIndex; }
};

/// Phi_{l,m}. Throws IndexError if m > l or m < 0, IndexAboveCutoff if l >= nu.
AssocFunction make_assoc(const ProblemParams& p, long l, int m);

/// kappa^m * phi with no index attached.
AssocFunction make_level_function(const ProblemParams& p, int m, Polynomial phi);

/// sigma(s)^{m/2} * phi(s). Throws DomainError outside (a, b).
double assoc_eval(const AssocFunction& f, double s);

/// Value and derivatives up to third order of a scalar function at a point.
struct Jet {
  double v = 0, d1 = 0, d2 = 0, d3 = 0;
};

/// Exact jet of kappa^m phi at s (analytic in sigma, Horner on phi and its derivatives).
Jet assoc_jet(const AssocFunction& f, double s);

/// Central-difference jet (value, first and second derivative) of a generic
/// callable, step h = 1e-5 * max(1, |s|).
Jet fd_jet(const std::function<double(double)>& f, double s);

/// H_m applied pointwise, following the second order operator
///   -sigma d^2 - tau d + m(m-2)/4 sigma'^2/sigma + m tau/2 sigma'/sigma
///   - m(m-2)/2 sigma'' - m tau'.
/// The returned jet holds the value and, when f.d3 is meaningful, the first derivative.
Jet apply_H_jet(const ProblemParams& p, int m, double s, const Jet& f);

/// A_m = kappa d/ds - m kappa' applied pointwise (value and first derivative).
Jet apply_A_jet(const ProblemParams& p, int m, double s, const Jet& f);

/// A_m^+ = -kappa d/ds - tau/kappa - (m - 1) kappa' applied pointwise.
Jet apply_Aplus_jet(const ProblemParams& p, int m, double s, const Jet& f);

/// (H_m f)(s) with exact derivatives. Requires m < nu and s inside (a, b).
double apply_Hm(const ProblemParams& p, int m, const AssocFunction& f, double s);

/// (H_m f)(s) for a generic callable, derivatives by central differences.
double apply_Hm(const ProblemParams& p, int m, const std::function<double(double)>& f, double s);

/// Residual of
///   Phi_{l,m+1} + [tau/kappa + 2(m-1) kappa'] Phi_{l,m} + (lambda_l - lambda_{m-1}) Phi_{l,m-1}
/// for 1 <= m <= l-1, or its two-term form
///   [tau/kappa + 2(l-1) kappa'] Phi_{l,l} + (lambda_l - lambda_{l-1}) Phi_{l,l-1}
/// when m == l. Throws IndexError for other (l, m).
double recurrence_residual(const ProblemParams& p, long l, int m, double s);

/// Throws DomainError unless s lies strictly inside the interval with sigma(s) > 0.
void require_inside(const ProblemParams& p, double s);

}  // namespace hyperorth
