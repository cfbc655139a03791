#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperorth/errors.hpp"
#include "hyperorth/schroedinger.hpp"

namespace hyperorth {

namespace {

// Number of eigenvalues below x of the tridiagonal matrix (diag d, constant off-diagonal e).
int sturm_count(const std::vector<double>& d, double e2, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = d[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::min();
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> fd_eigensolve(const std::function<double(double)>& V, double x_lo, double x_hi, int n_points,
                                  int k) {
  if (n_points < 200) throw DomainError("fd_eigensolve needs n_points >= 200");
  if (k < 1 || k > n_points) throw DomainError("fd_eigensolve needs 1 <= k <= n_points");
  if (!(x_hi > x_lo) || !std::isfinite(x_lo) || !std::isfinite(x_hi)) {
    throw DomainError("fd_eigensolve needs a finite box with x_lo < x_hi");
  }

  const double h = (x_hi - x_lo) / (n_points + 1);
  const double off = -1.0 / (h * h);
  std::vector<double> d(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double v = V(x_lo + (i + 1) * h);
    if (std::isnan(v)) throw DomainError("potential is NaN inside the box");
    d[static_cast<std::size_t>(i)] = 2.0 / (h * h) + v;
  }

  // Gershgorin bounds; huge wall values only push the upper bound out.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double di : d) {
    lo = std::min(lo, di - 2.0 * std::abs(off));
    hi = std::max(hi, di + 2.0 * std::abs(off));
  }
  hi = std::min(hi, std::numeric_limits<double>::max());

  const double e2 = off * off;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    double a = out.empty() ? lo : out.back(), b = hi;
    for (int it = 0; it < 2000 && b - a > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(d, e2, mid) > j) b = mid;
      else a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

SpectrumCheck fd_eigensolve_checked(const std::function<double(double)>& V, double x_lo, double x_hi,
                                    int n_points, int k, double match_tol) {
  SpectrumCheck r;
  r.eigenvalues = fd_eigensolve(V, x_lo, x_hi, n_points, k);
  r.refined = fd_eigensolve(V, x_lo, x_hi, 2 * n_points, k);
  r.max_shift = 0.0;
  for (int i = 0; i < k; ++i) {
    const double shift = std::abs(r.refined[i] - r.eigenvalues[i]);
    r.max_shift = std::max(r.max_shift, shift);
  }
  r.grid_too_coarse = r.max_shift > 10.0 * match_tol;
  return r;
}

// Boxes are sized so the highest bound state of V_0 has decayed by ~e^-20 at a
// wall: decay rate nu - l_top for the finite families, Gaussian tails otherwise.
Box default_box(const ProblemParams& p) {
  const double a = p.alpha_d(), b = p.beta_d();
  double decay = 1.0;
  if (!p.cutoff().is_infinite()) {
    const int l_top = *p.cutoff().count() - 1;
    decay = (1.0 - a) / 2.0 - l_top;
  }
  switch (p.case_id()) {
    case CaseId::One: {
      const double c = -b / a, w = 10.0 / std::sqrt(-a / 2.0);
      return {c - w, c + w, 4000};
    }
    case CaseId::S: return {0.0, std::sqrt(400.0 / -a), 4000};
    case CaseId::OneMinusS2: return {0.0, 3.141592653589793, 4000};
    case CaseId::S2MinusOne: return {0.0, 20.0 / decay + 5.0, 8000};
    case CaseId::S2: {
      // left wall where delta^2 e^{-2x} reaches 100x the threshold
      const double thr = potential_threshold(p, 0);
      const double delta2 = b * b / 4.0;
      return {-0.5 * std::log(100.0 * std::max(thr, 1.0) / delta2), 20.0 / decay, 8000};
    }
    case CaseId::S2PlusOne: {
      const double w = 20.0 / decay + 5.0;
      return {-w, w, 8000};
    }
  }
  return {-10.0, 10.0, 4000};
}

}  // namespace hyperorth
