#include "hyperorth/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hyperorth/classical.hpp"
#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"
#include "hyperorth/io.hpp"
#include "hyperorth/ladder.hpp"
#include "hyperorth/quadrature.hpp"
#include "hyperorth/schroedinger.hpp"

namespace hyperorth {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult finish(std::string name, double value, double tol, std::string detail, Clock::time_point t0) {
  CheckResult r;
  r.name = std::move(name);
  r.value = value;
  r.tolerance = tol;
  r.pass = std::isfinite(value) && value <= tol;
  r.detail = std::move(detail);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return v;
}

// Levels m with m + 1 < nu, at most three, and m < limit.
std::vector<int> ladder_levels(const ProblemParams& p, int limit) {
  std::vector<int> ms;
  for (int m = 0; m <= 2 && m < limit && p.cutoff().admits(m + 1); ++m) ms.push_back(m);
  return ms;
}

// Richardson-extrapolated central difference, O(h^4) with h = 1e-3 max(1, |x|).
template <class F>
double derivative(const F& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

double lam(const ProblemParams& p, long l) { return lambda(p, l).get_d(); }

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
  return {{"name", r.name},     {"value", format_double(r.value)}, {"tolerance", format_double(r.tolerance)},
          {"pass", r.pass},     {"detail", r.detail},              {"seconds", r.seconds}};
}

int index_limit(const ProblemParams& p, int cap) {
  if (p.cutoff().is_infinite()) return cap;
  return std::min(*p.cutoff().count(), cap);
}

std::vector<double> sample_s_grid(const ProblemParams& p, int n) {
  const double a = p.alpha_d(), b = p.beta_d();
  switch (p.case_id()) {
    case CaseId::One: {
      const double c = -b / a, w = 3.0 / std::sqrt(-a / 2.0);
      return linspace(c - w, c + w, n);
    }
    case CaseId::S: return linspace(0.1 / -a, (b + 10.0) / -a, n);
    case CaseId::OneMinusS2: return linspace(-0.95, 0.95, n);
    case CaseId::S2MinusOne: return linspace(1.05, 5.0, n);
    case CaseId::S2: return linspace(0.05, 3.0, n);
    case CaseId::S2PlusOne: return linspace(-3.0, 3.0, n);
  }
  return linspace(-1.0, 1.0, n);
}

std::vector<double> sample_x_grid(const ProblemParams& p, int n) {
  const ChangeOfVariable cv = change_of_variable(p.case_id());
  std::vector<double> xs;
  for (double s : sample_s_grid(p, n)) xs.push_back(cv.x_of_s(s));
  std::sort(xs.begin(), xs.end());
  return xs;
}

CheckResult check_dual_generation(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int l = 0; l < limit; ++l) {
    if (!(poly_coeffs(p, l) == rodrigues_coeffs(p, l))) ++bad;
  }
  return finish("dual-generation", bad, tol, "poly_coeffs == rodrigues_coeffs for l < " + std::to_string(limit), t0);
}

CheckResult check_ladder_closure(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int l = 0; l < limit; ++l) {
    for (int m = 0; m <= l; ++m) {
      const AssocFunction f = make_assoc(p, l, m);
      if (m == l) {
        if (p.cutoff().admits(m + 1) && !apply_A(f).is_zero()) ++bad;
        continue;
      }
      const AssocFunction g = make_assoc(p, l, m + 1);
      const Rational gap = lambda(p, l) - lambda(p, m);
      if (!(apply_A(f).phi == g.phi)) ++bad;
      if (!(apply_Aplus(g).phi == gap * f.phi)) ++bad;
      if (!(apply_Aplus(apply_A(f)).phi == gap * f.phi)) ++bad;
      if (!(apply_A(apply_Aplus(g)).phi == gap * g.phi)) ++bad;
    }
  }
  return finish("ladder-closure", bad, tol, "A Phi_{l,m} = Phi_{l,m+1}, A+ A and A A+ scale by lambda_l - lambda_m", t0);
}

CheckResult check_build_from_top(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int l = 1; l < limit; ++l) {
    for (int m = 0; m < l; ++m) {
      if (!(build_from_top(p, l, m).phi == make_assoc(p, l, m).phi)) ++bad;
    }
  }
  return finish("build-from-top", bad, tol, "top-down chain equals Phi_{l,m} exactly", t0);
}

CheckResult check_orthogonality(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::ostringstream detail;
  for (int m = 0; m <= 2 && m < limit; ++m) {
    const double off = gram_matrix(p, m, limit - 1).max_relative_offdiagonal();
    worst = std::max(worst, off);
    detail << "m=" << m << ": " << format_double(off) << "; ";
  }
  return finish("orthogonality", worst, tol, detail.str(), t0);
}

CheckResult check_adjointness(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  auto compare = [&](const AssocFunction& f, const AssocFunction& g) {
    // f at level m, g at level m + 1
    const AssocFunction af = apply_A(f), apg = apply_Aplus(g);
    const double lhs = af.is_zero() ? 0.0 : inner_product(af, g).value;
    const double rhs = apg.is_zero() ? 0.0 : inner_product(f, apg).value;
    double scale = 0.0;
    if (!af.is_zero()) scale = std::max(scale, std::sqrt(inner_product(af, af).value * inner_product(g, g).value));
    if (!apg.is_zero()) scale = std::max(scale, std::sqrt(inner_product(f, f).value * inner_product(apg, apg).value));
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  };
  for (int m : ladder_levels(p, limit)) {
    if (m + 1 >= limit) continue;
    Polynomial fsum, gsum;
    for (int l = m; l < limit; ++l) {
      for (int k = m + 1; k < limit; ++k) compare(make_assoc(p, l, m), make_assoc(p, k, m + 1));
      fsum += Rational(1, l + 1) * make_assoc(p, l, m).phi;
      if (l >= m + 1) gsum += Rational(l + 2, 2 * l + 1) * make_assoc(p, l, m + 1).phi;
    }
    compare(make_level_function(p, m, fsum), make_level_function(p, m + 1, gsum));
  }
  return finish("adjointness", worst, tol, "<A f, g> = <f, A+ g> by quadrature", t0);
}

CheckResult check_norm_recursion(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int l = 1; l < limit; ++l) {
    const std::vector<double> norms = norm_chain(p, l);
    for (int m = 0; m < l; ++m) {
      const double ratio = norms[m + 1] * norms[m + 1] / (norms[m] * norms[m]);
      const double expect = lam(p, l) - lam(p, m);
      worst = std::max(worst, std::abs(ratio - expect) / expect);
    }
  }
  return finish("norm-recursion", worst, tol, "||Phi_{l,m+1}||^2 = (lambda_l - lambda_m) ||Phi_{l,m}||^2", t0);
}

CheckResult check_classical(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  const std::vector<double> grid = sample_s_grid(p, 40);
  double worst = 0.0;
  for (int l = 0; l < std::min(limit, 8); ++l) worst = std::max(worst, classical_residual(p, l, grid));
  return finish("classical-proportionality", worst, tol, "Phi_l against the classical polynomial", t0);
}

CheckResult check_classical_reality(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  const std::vector<double> grid = sample_s_grid(p, 40);
  double worst = 0.0;
  for (int l = 0; l < std::min(limit, 8); ++l) worst = std::max(worst, classical_fit(p, l, grid).max_rel_imag);
  return finish("classical-reality", worst, tol, "max |Im| / max |Re| of the classical expression", t0);
}

CheckResult check_factorization(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  const std::vector<double> grid = sample_s_grid(p, 20);
  double worst = 0.0;
  auto run = [&](int m, const AssocFunction& f) {
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    const AssocFunction upper = make_level_function(p, m + 1, f.phi);
    const AssocFunction down = apply_Aplus(upper);
    const double lm = lam(p, m);
    for (double s : grid) {
      const auto [a, b] = factorization_residual(p, m, f, s);
      const auto [c, d] = intertwine_residual(p, m, f, s);
      r1 = std::max(r1, std::abs(a));
      r2 = std::max(r2, std::abs(b));
      r3 = std::max(r3, std::abs(c));
      r4 = std::max(r4, std::abs(d));
      const Jet jl = assoc_jet(make_level_function(p, m, f.phi), s), ju = assoc_jet(upper, s);
      s1 = std::max(s1, std::abs(apply_H_jet(p, m, s, jl).v) + std::abs(lm * jl.v));
      s2 = std::max(s2, std::abs(apply_H_jet(p, m + 1, s, ju).v) + std::abs(lm * ju.v));
      const Jet jd = assoc_jet(down, s);
      s3 = std::max(s3, std::abs(apply_H_jet(p, m, s, jd).v));
      s4 = std::max(s4, std::abs(apply_A_jet(p, m, s, apply_H_jet(p, m, s, jd)).v));
    }
    if (s1 > 0) worst = std::max(worst, r1 / s1);
    if (s2 > 0) worst = std::max(worst, r2 / s2);
    if (s3 > 0) worst = std::max(worst, r3 / s3);
    if (s4 > 0) worst = std::max(worst, r4 / s4);
  };
  for (int m : ladder_levels(p, limit)) {
    for (int l = m; l < limit; ++l) run(m, make_assoc(p, l, m));
    run(m, make_level_function(p, m, Polynomial{1, 0, 0, 1}));
  }
  return finish("factorization", worst, tol, "H - lambda = A+A, AA+, intertwining; relative to operator scale", t0);
}

CheckResult check_riccati(const ProblemParams& p, double tol) {
  const auto t0 = Clock::now();
  const int sign = change_of_variable(p.case_id()).sign;
  const std::vector<double> grid = sample_x_grid(p, 20);
  double worst = 0.0;
  for (int m : ladder_levels(p, 3)) {
    const double lm = lam(p, m);
    for (double x : grid) {
      const double w = superpotential_W(p, m, x), dw = superpotential_dW(p, m, x);
      const double v = potential_V(p, m, x);
      const double scale = w * w + std::abs(dw) + std::abs(lm) + 1.0;
      const double dw_fd = derivative([&](double y) { return superpotential_W(p, m, y); }, x);
      worst = std::max(worst, std::abs(dw - dw_fd) / (std::abs(dw) + 1.0));
      worst = std::max(worst, std::abs(v - lm - (w * w - sign * dw)) / scale);
      worst = std::max(worst, std::abs(closed_form_V(p, m, x) - v) / scale);
      worst = std::max(worst, std::abs(closed_form_W(p, m, x) - w) / (std::abs(w) + 1.0));
      if (p.cutoff().admits(m + 2)) {
        worst = std::max(worst, std::abs(potential_V(p, m + 1, x) - lm - (w * w + sign * dw)) / scale);
      }
    }
  }
  return finish("riccati", worst, tol, "V_m, V_{m+1} from W_m; dW analytic vs differences; closed forms", t0);
}

CheckResult check_susy_pairing(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  const int sign = change_of_variable(p.case_id()).sign;
  const std::vector<double> grid = sample_x_grid(p, 20);
  double worst = 0.0;
  for (int m : ladder_levels(p, limit)) {
    for (int l = m; l < std::min(limit, m + 4); ++l) {
      const PsiFunction psi = make_psi(p, l, m);
      const double lm = lam(p, m);
      double res = 0.0, scale = 0.0;
      for (double x : grid) {
        const double d2 = derivative([&](double y) { return psi.derivative(y); }, x);
        const double v = psi.value(x);
        const double lhs = -d2 + (potential_V(p, m, x) - lm) * v;
        auto raised = [&](double y) { return ladder_x(p, m, LadderDirection::Raise, psi, y); };
        const double rhs = -sign * derivative(raised, x) + superpotential_W(p, m, x) * raised(x);
        res = std::max(res, std::abs(lhs - rhs));
        scale = std::max(scale, std::abs(d2) + std::abs((potential_V(p, m, x) - lm) * v));
      }
      if (scale > 0) worst = std::max(worst, res / scale);
    }
  }
  return finish("susy-pairing", worst, tol, "(-d^2 + V_m - lambda_m) Psi = A+ A Psi on Psi_{l,m}", t0);
}

CheckResult check_ground_state(const ProblemParams& p, double tol) {
  const auto t0 = Clock::now();
  const int sign = change_of_variable(p.case_id()).sign;
  const std::vector<double> grid = sample_x_grid(p, 20);
  double worst = 0.0;
  for (int m : ladder_levels(p, 3)) {
    const PsiFunction psi = make_psi(p, m, m);
    for (double x : grid) {
      const double v = psi.value(x);
      const double w_est = -sign * derivative([&](double y) { return psi.value(y); }, x) / v;
      const double w = superpotential_W(p, m, x);
      worst = std::max(worst, std::abs(w_est - w) / std::max(1.0, std::abs(w)));
      const double v_est = derivative([&](double y) { return psi.derivative(y); }, x) / v + lam(p, m);
      const double vm = closed_form_V(p, m, x);
      worst = std::max(worst, std::abs(v_est - vm) / std::max(1.0, std::abs(vm)));
    }
  }
  return finish("ground-state", worst, tol, "W_m = -+Psi'/Psi and V_m = Psi''/Psi + lambda_m on Psi_{m,m}", t0);
}

CheckResult check_x_ladder(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  const std::vector<double> grid = sample_x_grid(p, 20);
  double worst = 0.0;
  auto rel = [](const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0, scale = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff = std::max(diff, std::abs(a[i] - b[i]));
      scale = std::max(scale, std::abs(b[i]));
    }
    return scale > 0 ? diff / scale : diff;
  };
  for (int m : ladder_levels(p, limit)) {
    // ground state annihilation, relative to the size of Psi'
    const PsiFunction ground = make_psi(p, m, m);
    double ann = 0, dscale = 0;
    for (double x : grid) {
      ann = std::max(ann, std::abs(ladder_x(p, m, LadderDirection::Raise, ground, x)));
      dscale = std::max(dscale, std::abs(ground.derivative(x)) + std::abs(ground.value(x)));
    }
    worst = std::max(worst, ann / dscale);

    for (int l = m + 1; l < limit; ++l) {
      const PsiFunction lo = make_psi(p, l, m), hi = make_psi(p, l, m + 1);
      const double gap = lam(p, l) - lam(p, m);
      std::vector<double> up, down, ref_hi, ref_lo;
      for (double x : grid) {
        up.push_back(ladder_x(p, m, LadderDirection::Raise, lo, x));
        down.push_back(ladder_x(p, m, LadderDirection::Lower, hi, x) / gap);
        ref_hi.push_back(hi.value(x));
        ref_lo.push_back(lo.value(x));
      }
      worst = std::max({worst, rel(up, ref_hi), rel(down, ref_lo), rel(build_psi_from_top(p, l, m, grid), ref_lo)});
    }
  }
  return finish("x-ladder", worst, tol, "A Psi_{l,m} = Psi_{l,m+1}, A+ and top-down chain against psi_eval", t0);
}

CheckResult check_spectrum(const ProblemParams& p, int limit, double tol) {
  const auto t0 = Clock::now();
  if (!p.cutoff().admits(1)) return finish("fd-spectrum", 0.0, tol, "single bound state; V_0 needs nu > 1", t0);
  const int k = p.cutoff().is_infinite() ? std::min(limit, 4) : limit;
  const Box box = default_box(p);
  const std::vector<double> ev =
      fd_eigensolve([&](double x) { return potential_V(p, 0, x); }, box.lo, box.hi, box.n_points, k);
  double worst = 0.0;
  std::ostringstream detail;
  detail << "box [" << format_double(box.lo) << ", " << format_double(box.hi) << "] n=" << box.n_points << ":";
  for (int l = 0; l < k; ++l) {
    const double expect = lam(p, l);
    worst = std::max(worst, std::abs(ev[l] - expect) / std::max(std::abs(expect), 1.0));
    detail << ' ' << format_double(ev[l]);
  }
  return finish("fd-spectrum", worst, tol, detail.str(), t0);
}

std::vector<CheckResult> run_verify(const ProblemParams& p, int l_max, double tol_override) {
  p.require_index(l_max);
  const int limit = l_max + 1;
  auto t = [&](double tol) { return tol_override > 0 ? tol_override : tol; };
  std::vector<CheckResult> out;
  out.push_back(check_dual_generation(p, limit, t(0.0)));
  out.push_back(check_ladder_closure(p, limit, t(0.0)));
  out.push_back(check_build_from_top(p, limit, t(0.0)));
  out.push_back(check_orthogonality(p, limit, t(1e-8)));
  out.push_back(check_norm_recursion(p, limit, t(1e-6)));
  out.push_back(check_adjointness(p, limit, t(1e-6)));
  out.push_back(check_classical(p, limit, t(1e-9)));
  if (p.case_id() == CaseId::S2PlusOne) out.push_back(check_classical_reality(p, limit, t(1e-10)));
  if (p.cutoff().admits(1)) {
    out.push_back(check_factorization(p, limit, t(1e-8)));
    out.push_back(check_riccati(p, t(1e-8)));
    out.push_back(check_susy_pairing(p, limit, t(1e-6)));
    out.push_back(check_ground_state(p, t(1e-6)));
    out.push_back(check_x_ladder(p, limit, t(1e-6)));
  }
  out.push_back(check_spectrum(p, limit, t(1e-3)));
  return out;
}

}  // namespace hyperorth
