#pragma once

#include <utility>
#include <vector>

#include "hyperorth/assoc.hpp"
#include "hyperorth/quadrature.hpp"

namespace hyperorth {

/// A_m acting on a level-m function kappa^m phi. Exactly, A_m (kappa^m phi) =
/// kappa^{m+1} phi', so the image is the level m+1 function with phi -> phi'.
/// A_m Phi_{l,l} is the zero function; the result keeps the index l.
AssocFunction apply_A(const AssocFunction& f);

/// A_m^+ acting on a level m+1 function kappa^{m+1} phi. The image is the level m
/// function with phi -> -sigma phi' - (m sigma' + tau) phi. The result is not
/// rescaled: for f = Phi_{l,m+1} it equals (lambda_l - lambda_m) Phi_{l,m}.
/// Requires f.m >= 1.
AssocFunction apply_Aplus(const AssocFunction& f);

/// Phi_{l,m} rebuilt from Phi_{l,l} (polynomial part l!) by the chain of scaled
/// A^+_j / (lambda_l - lambda_j), j = l-1 down to m. Requires 0 <= m < l < nu.
AssocFunction build_from_top(const ProblemParams& p, long l, int m);

/// ||Phi_{l,m}||_rho for m = 0..l, each by quadrature.
std::vector<double> norm_chain(const ProblemParams& p, long l, const QuadratureOptions& opt = {});

/// Pointwise residuals (r1, r2) of
///   H_m - lambda_m = A_m^+ A_m         on f at level m,
///   H_{m+1} - lambda_m = A_m A_m^+     on kappa^{m+1} f.phi.
/// Both sides are evaluated with the numeric operators on exact jets. Requires
/// m + 1 < nu and s inside (a, b).
std::pair<double, double> factorization_residual(const ProblemParams& p, int m, const AssocFunction& f, double s);

/// Pointwise residuals (r1, r2) of
///   H_m A_m^+ = A_m^+ H_{m+1}     on f (level m+1),
///   A_m H_m = H_{m+1} A_m         on g = A_m^+ f (level m).
std::pair<double, double> intertwine_residual(const ProblemParams& p, int m, const AssocFunction& f, double s);

/// Requires m + 1 < nu.
void require_ladder_level(const ProblemParams& p, int m);

}  // namespace hyperorth
