#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperorth/assoc.hpp"
#include "hyperorth/family.hpp"

namespace hyperorth {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int nodes_used = 0;
  /// Sum of |integrand| * weight over the final node set; the natural scale of
  /// rounding error for integrals that cancel to zero.
  double l1_norm = 0.0;
  int levels = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Hard limit on evaluated nodes (the finest level stays below it).
  int max_nodes = 1 << 15;
};

/// Point handed to integrands: the abscissa and its distances to both ends,
/// computed in transform coordinates so that they stay accurate where the
/// abscissa itself rounds onto an endpoint.
struct Abscissa {
  double x;
  Gaps gaps;
};

/// Double-exponential quadrature of f over (lo, hi): tanh-sinh on finite
/// intervals, exp-sinh on half lines, sinh-sinh on the real line. The step is
/// halved until two successive levels agree.
/// Throws NoConvergence or NonIntegrable.
QuadratureResult integrate(const std::function<double(const Abscissa&)>& f, double lo, double hi,
                           const QuadratureOptions& opt = {});

/// Convenience overload for integrands that only need the abscissa.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opt = {});

/// <f, g> = int_a^b f(s) g(s) rho(s) ds over the family's interval.
/// Symmetric bit-for-bit in (f, g).
QuadratureResult inner_product(const ProblemParams& p, const std::function<double(double)>& f,
                               const std::function<double(double)>& g, const QuadratureOptions& opt = {});

/// Weighted inner product of two kappa^m phi functions.
QuadratureResult inner_product(const AssocFunction& f, const AssocFunction& g, const QuadratureOptions& opt = {});

/// G[i][j] = <Phi_{m+i,m}, Phi_{m+j,m}>_rho for m <= l, k <= l_max.
struct GramMatrix {
  int m = 0;
  int l_max = 0;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> error_estimates;

  /// Largest |G_lk| / sqrt(G_ll G_kk) over l != k.
  double max_relative_offdiagonal() const;
  /// CSV with header "l\k,<m>,...,<l_max>" and one row per l.
  std::string to_csv() const;
};

/// Requires m <= l_max < nu. Throws IndexAboveCutoff past the cutoff.
GramMatrix gram_matrix(const ProblemParams& p, int m, int l_max, const QuadratureOptions& opt = {});

}  // namespace hyperorth
