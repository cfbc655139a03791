#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperorth/assoc.hpp"
#include "hyperorth/family.hpp"

namespace hyperorth {

/// s = s(x) with ds/dx = sign * kappa(s(x)), mapping (x_lo, x_hi) onto (a, b).
///
///   One         s = x          (-inf, inf)  +1
///   S           s = x^2 / 4    (0, inf)     +1
///   OneMinusS2  s = cos x      (0, pi)      -1
///   S2MinusOne  s = cosh x     (0, inf)     +1
///   S2          s = e^x        (-inf, inf)  +1
///   S2PlusOne   s = sinh x     (-inf, inf)  +1
struct ChangeOfVariable {
  CaseId case_id;
  Interval x_interval;
  int sign;

  double s_of_x(double x) const;
  /// ds/dx, equal to sign * kappa(s(x)).
  double ds_dx(double x) const;
  /// Distances of s(x) to the ends of (a, b), accurate near finite ends.
  Gaps gaps(double x) const;
  /// Inverse map.
  double x_of_s(double s) const;
};

ChangeOfVariable change_of_variable(CaseId c);

enum class PotentialFamily { HarmonicLike, RadialLike, PoschlTeller, GenPoschlTeller, Morse, ScarfHyperbolic };

std::string_view family_name(PotentialFamily f);

/// Constants of the partner level m:
///   alpha_m = (1 - alpha - 2m)/2, alpha'_m = (-1 - alpha + 2m)/2, delta = -beta/2.
struct PotentialSpec {
  ProblemParams params;
  int m;
  PotentialFamily family;
  double alpha_m;
  double alpha_prime_m;
  double delta;
  double lambda_m;
};

PotentialSpec potential_spec(const ProblemParams& p, int m);

/// Psi_{l,m}(x) = sqrt(kappa rho) Phi_{l,m} at s = s(x). Returns 0 where the
/// change of variable has saturated onto an end of (a, b). Throws DomainError
/// outside (x_lo, x_hi).
double psi_eval(const ProblemParams& p, long l, int m, double x);

/// A function of x of the form sqrt(kappa rho) kappa^m chi(s(x)) with a
/// polynomial chi; values and exact first derivatives by the chain rule.
struct PsiFunction {
  ProblemParams params;
  int m;
  Polynomial chi;

  double value(double x) const;
  double derivative(double x) const;
};

PsiFunction make_psi(const ProblemParams& p, long l, int m);

/// W_m(x) = -tau/(2 kappa) -+ (2m-1)/(2 kappa) d kappa/dx at s = s(x), with the
/// upper sign for ds/dx = +kappa and the lower for ds/dx = -kappa. Both reduce
/// to -(2 tau + (2m-1) sigma') / (4 kappa). Requires m + 1 < nu.
double superpotential_W(const ProblemParams& p, int m, double x);

/// dW_m/dx, analytic.
double superpotential_dW(const ProblemParams& p, int m, double x);

/// V_m(x) = W_m^2 - dW_m/dx + lambda_m for ds/dx = +kappa and
/// V_m(x) = W_m^2 + dW_m/dx + lambda_m for ds/dx = -kappa.
double potential_V(const ProblemParams& p, int m, double x);

/// Named closed forms for the four trigonometric/hyperbolic/exponential families.
/// For One and S the general Riccati expression is returned.
double closed_form_W(const ProblemParams& p, int m, double x);
double closed_form_V(const ProblemParams& p, int m, double x);

/// lim V_m at the unbounded end(s) of the x interval, i.e. the continuum
/// threshold; +inf when V_m is confining.
double potential_threshold(const ProblemParams& p, int m);

enum class LadderDirection {
  Raise,  ///< script A_m: level m -> m + 1
  Lower   ///< script A_m^+: level m + 1 -> m
};

/// (+-d/dx + W_m) f at x with exact derivative of a Psi-backed f.
double ladder_x(const ProblemParams& p, int m, LadderDirection dir, const PsiFunction& f, double x);

/// Same operator on a generic callable, derivative by central differences
/// (h = 1e-5 max(1, |x|)).
double ladder_x(const ProblemParams& p, int m, LadderDirection dir, const std::function<double(double)>& f,
                double x);

/// Same operator on samples over a uniform grid: second-order differences,
/// one-sided at the two ends.
std::vector<double> ladder_x(const ProblemParams& p, int m, LadderDirection dir, std::span<const double> grid,
                             std::span<const double> values);

/// Psi_{l,m} sampled on a grid, built from Psi_{l,l} by the chain of
/// script-A^+_j / (lambda_l - lambda_j). The intermediate levels are carried as
/// Psi-backed functions (polynomial parts from the s-space ladder) so that the
/// x-space operator of the last step acts with an exact derivative.
/// Requires 0 <= m < l < nu.
std::vector<double> build_psi_from_top(const ProblemParams& p, long l, int m, std::span<const double> grid);

/// Bound-state energies of -d^2/dx^2 + V on [x_lo, x_hi] with Dirichlet walls:
/// k lowest eigenvalues of the 3-point discretization on n_points interior
/// nodes, by Sturm-sequence bisection on the symmetric tridiagonal matrix.
/// Requires n_points >= 200 and 1 <= k <= n_points.
std::vector<double> fd_eigensolve(const std::function<double(double)>& V, double x_lo, double x_hi, int n_points,
                                  int k);

struct SpectrumCheck {
  std::vector<double> eigenvalues;
  std::vector<double> refined;  // same solve at 2 n_points
  double max_shift;
  /// Doubling the grid moved an eigenvalue by more than 10x the match tolerance.
  bool grid_too_coarse;
};

/// fd_eigensolve plus the grid-doubling diagnostic.
SpectrumCheck fd_eigensolve_checked(const std::function<double(double)>& V, double x_lo, double x_hi,
                                    int n_points, int k, double match_tol);

/// Default Dirichlet box for the spectral check of V_0 (documented per family).
struct Box {
  double lo, hi;
  int n_points;
};
Box default_box(const ProblemParams& p);

}  // namespace hyperorth
