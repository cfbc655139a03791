#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"

namespace hyperorth {

namespace {

// Newton steps in long double until the correction stalls.
double polish(const std::vector<long double>& c, double x0) {
  long double x = x0;
  for (int it = 0; it < 8; ++it) {
    long double v = 0, d = 0;
    for (auto k = c.size(); k-- > 0;) {
      d = d * x + v;
      v = v * x + c[k];
    }
    if (d == 0) break;
    const long double step = v / d;
    x -= step;
    if (std::fabs(step) <= 1e-18L * std::max<long double>(1, std::fabs(x))) break;
  }
  return static_cast<double>(x);
}

}  // namespace

std::vector<double> real_roots(const Polynomial& poly) {
  const int n = poly.degree();
  if (n < 1) return {};
  const Polynomial monic = poly.monic();

  // Companion matrix of s^n + c_{n-1} s^{n-1} + ... + c_0.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic.coeff(i).get_d();

  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  const Eigen::VectorXcd ev = es.eigenvalues();

  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = monic.coeff(k).get_d();
  }

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots.push_back(polish(c, ev(i).real()));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> zeros(const ProblemParams& p, long l) {
  const Polynomial phi = poly_coeffs(p, l);
  auto roots = real_roots(phi);
  const Interval& iv = p.interval();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const bool inside = iv.contains(roots[i]);
    const bool distinct = i == 0 || roots[i] > roots[i - 1];
    if (!inside || !distinct) {
      std::ostringstream msg;
      msg << "root finder lost a zero of Phi_" << l << " near s = " << roots[i];
      throw NoConvergence(msg.str());
    }
  }
  return roots;
}

}  // namespace hyperorth
