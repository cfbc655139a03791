#include "hyperorth/classical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"

namespace hyperorth {

double hermite(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double p, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 1.0 + p - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + p - x) * cur - (k + p) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// C(w, j) = w (w-1) ... (w-j+1) / j!
cdouble binom(cdouble w, int j) {
  cdouble r = 1.0;
  for (int i = 0; i < j; ++i) r *= (w - static_cast<double>(i)) / static_cast<double>(i + 1);
  return r;
}

cdouble ipow(cdouble z, int k) {
  cdouble r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

cdouble jacobi(int n, cdouble a, cdouble b, cdouble z) {
  const cdouble lo = (z - 1.0) / 2.0;
  const cdouble hi = (z + 1.0) / 2.0;
  const double nd = n;
  cdouble sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += binom(nd + a, n - k) * binom(nd + b, k) * ipow(lo, k) * ipow(hi, n - k);
  }
  return sum;
}

ClassicalSpec classical_spec(const ProblemParams& params, int l) {
  const double a = params.alpha_d();
  const double b = params.beta_d();
  ClassicalSpec spec{};
  spec.degree = l;
  spec.source = params.case_id();
  spec.alpha = a;
  spec.beta = b;
  switch (params.case_id()) {
    case CaseId::One: spec.kind = ClassicalSpec::Kind::Hermite; break;
    case CaseId::S:
      spec.kind = ClassicalSpec::Kind::Laguerre;
      spec.p = b - 1.0;
      break;
    case CaseId::OneMinusS2:
      spec.kind = ClassicalSpec::Kind::Jacobi;
      spec.p = -(a + b) / 2.0 - 1.0;
      spec.q = (-a + b) / 2.0 - 1.0;
      break;
    case CaseId::S2MinusOne:
      spec.kind = ClassicalSpec::Kind::Jacobi;
      spec.p = (a - b) / 2.0 - 1.0;
      spec.q = (a + b) / 2.0 - 1.0;
      break;
    case CaseId::S2:
      spec.kind = ClassicalSpec::Kind::Laguerre;
      spec.p = 1.0 - a - 2.0 * l;
      break;
    case CaseId::S2PlusOne:
      spec.kind = ClassicalSpec::Kind::Jacobi;
      spec.p = cdouble(a / 2.0 - 1.0, b / 2.0);
      spec.q = cdouble(a / 2.0 - 1.0, -b / 2.0);
      break;
  }
  return spec;
}

cdouble classical_eval(const ClassicalSpec& spec, double s) {
  const int l = spec.degree;
  const double a = spec.alpha;
  const double b = spec.beta;
  switch (spec.source) {
    case CaseId::One: return hermite(l, std::sqrt(-a / 2.0) * s - b / std::sqrt(-2.0 * a));
    case CaseId::S: return laguerre(l, spec.p.real(), -a * s);
    case CaseId::OneMinusS2: return jacobi(l, spec.p, spec.q, s);
    case CaseId::S2MinusOne: return jacobi(l, spec.p, spec.q, -s);
    case CaseId::S2: return std::pow(s / b, l) * laguerre(l, spec.p.real(), b / s);
    case CaseId::S2PlusOne: {
      const cdouble i(0.0, 1.0);
      return ipow(i, l) * jacobi(l, spec.p, spec.q, i * s);
    }
  }
  return 0.0;
}

ProportionalityFit classical_fit(const ProblemParams& params, int l, std::span<const double> grid) {
  params.require_index(l);
  if (grid.size() < static_cast<std::size_t>(l) + 2) throw DomainError("proportionality fit needs at least l + 2 points");
  const Polynomial phi = poly_coeffs(params, l);
  const ClassicalSpec spec = classical_spec(params, l);

  std::vector<double> y, c;
  double max_re = 0.0, max_im = 0.0;
  for (double s : grid) {
    if (!params.interval().contains(s)) throw DomainError("proportionality grid point outside (a, b)");
    const cdouble v = classical_eval(spec, s);
    y.push_back(phi(s));
    c.push_back(v.real());
    max_re = std::max(max_re, std::abs(v.real()));
    max_im = std::max(max_im, std::abs(v.imag()));
  }

  double cc = 0.0, cy = 0.0, ymax = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    cc += c[i] * c[i];
    cy += c[i] * y[i];
    ymax = std::max(ymax, std::abs(y[i]));
  }
  if (cc == 0.0) throw DegenerateFit("classical expression vanishes on the whole grid");
  const double k = cy / cc;

  double dev = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) dev = std::max(dev, std::abs(y[i] - k * c[i]));
  return {k, ymax > 0.0 ? dev / ymax : dev, max_re > 0.0 ? max_im / max_re : max_im};
}

double classical_residual(const ProblemParams& params, int l, std::span<const double> grid) {
  return classical_fit(params, l, grid).max_rel_deviation;
}

}  // namespace hyperorth
