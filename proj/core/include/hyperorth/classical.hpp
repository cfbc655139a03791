#pragma once

#include <complex>
#include <span>

#include "hyperorth/family.hpp"

namespace hyperorth {

using cdouble = std::complex<double>;

/// H_n(x), physicists' convention, by H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite(int n, double x);

/// Generalized Laguerre L_n^p(x) by (n+1) L_{n+1} = (2n+1+p-x) L_n - (n+p) L_{n-1}.
double laguerre(int n, double p, double x);

/// Jacobi P_n^{(a,b)}(z) for complex parameters and argument, from the finite sum
///   sum_k C(n+a, n-k) C(n+b, k) ((z-1)/2)^k ((z+1)/2)^{n-k}
/// with generalized binomial coefficients.
cdouble jacobi(int n, cdouble a, cdouble b, cdouble z);

/// Classical polynomial a family's Phi_l is proportional to, evaluated at s.
///   One           H_l(sqrt(-alpha/2) s - beta / sqrt(-2 alpha))
///   S             L_l^{beta-1}(-alpha s)
///   OneMinusS2    P_l^{(-(alpha+beta)/2-1, (-alpha+beta)/2-1)}(s)
///   S2MinusOne    P_l^{((alpha-beta)/2-1, (alpha+beta)/2-1)}(-s)
///   S2            (s/beta)^l L_l^{1-alpha-2l}(beta/s)
///   S2PlusOne     i^l P_l^{((alpha+i beta)/2-1, (alpha-i beta)/2-1)}(i s)
struct ClassicalSpec {
  enum class Kind { Hermite, Laguerre, Jacobi };
  Kind kind;
  int degree;
  cdouble p{0.0, 0.0};  // Laguerre parameter, or first Jacobi parameter
  cdouble q{0.0, 0.0};  // second Jacobi parameter
  CaseId source;
  double alpha, beta;
};

ClassicalSpec classical_spec(const ProblemParams& params, int l);

/// Value of the classical expression at s. Real for every family; the
/// imaginary part is a rounding residual (nonzero only for S2PlusOne).
cdouble classical_eval(const ClassicalSpec& spec, double s);

struct ProportionalityFit {
  double constant;           // least-squares c in Phi_l ~ c * classical
  double max_rel_deviation;  // max |Phi_l - c classical| / max |Phi_l|
  double max_rel_imag;       // max |Im classical| / max |Re classical|
};

/// Fits Phi_l ~ c * classical on the grid and reports the deviation.
/// Requires l < nu and at least l + 2 distinct interior points.
/// Throws DegenerateFit if the classical expression vanishes on the grid.
ProportionalityFit classical_fit(const ProblemParams& params, int l, std::span<const double> grid);

/// classical_fit(...).max_rel_deviation.
double classical_residual(const ProblemParams& params, int l, std::span<const double> grid);

}  // namespace hyperorth
