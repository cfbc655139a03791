#include "hyperorth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hyperorth/errors.hpp"

namespace hyperorth {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Transform-coordinate half width. Beyond it every map below has saturated
// (endpoint gaps underflow or the abscissa overflows).
constexpr double kTMax = 6.5;

enum class Shape { Finite, LowerHalf, UpperHalf, Whole };

struct Node {
  Abscissa a;
  double jacobian;
  bool valid;
};

class Transform {
 public:
  Transform(double lo, double hi) : lo_(lo), hi_(hi) {
    const bool flo = std::isfinite(lo), fhi = std::isfinite(hi);
    if (flo && fhi) shape_ = Shape::Finite;
    else if (flo) shape_ = Shape::LowerHalf;  // (lo, +inf)
    else if (fhi) shape_ = Shape::UpperHalf;  // (-inf, hi)
    else shape_ = Shape::Whole;
  }

  Node at(double t) const {
    const double u = kHalfPi * std::sinh(t);
    const double du = kHalfPi * std::cosh(t);
    constexpr double inf = std::numeric_limits<double>::infinity();
    Node n{};
    switch (shape_) {
      case Shape::Finite: {
        const double r = 0.5 * (hi_ - lo_);
        const double e = std::exp(-2.0 * std::abs(u));
        const double near = 2.0 * r * e / (1.0 + e);
        const double far = 2.0 * r / (1.0 + e);
        if (u < 0) {
          n.a.gaps = {near, far};
          n.a.x = lo_ + near;
        } else {
          n.a.gaps = {far, near};
          n.a.x = hi_ - near;
        }
        n.jacobian = r * du * 4.0 * e / ((1.0 + e) * (1.0 + e));
        n.valid = near > 0.0;  // x may round onto an end; the gaps stay exact
        break;
      }
      case Shape::LowerHalf: {
        const double g = std::exp(u);
        n.a.x = lo_ + g;
        n.a.gaps = {g, inf};
        n.jacobian = g * du;
        n.valid = g > 0.0 && std::isfinite(n.a.x) && std::isfinite(n.jacobian);
        break;
      }
      case Shape::UpperHalf: {
        const double g = std::exp(u);
        n.a.x = hi_ - g;
        n.a.gaps = {inf, g};
        n.jacobian = g * du;
        n.valid = g > 0.0 && std::isfinite(n.a.x) && std::isfinite(n.jacobian);
        break;
      }
      case Shape::Whole: {
        n.a.x = std::sinh(u);
        n.a.gaps = {inf, inf};
        n.jacobian = std::cosh(u) * du;
        n.valid = std::isfinite(n.a.x) && std::isfinite(n.jacobian);
        break;
      }
    }
    return n;
  }

 private:
  double lo_, hi_;
  Shape shape_;
};

struct LevelSums {
  double sum = 0.0;
  double abs_sum = 0.0;
  double peak = 0.0;
  // |term| at the outermost valid node on each side, with its |t|.
  double tail_lo = 0.0, tail_hi = 0.0;
  double tail_lo_t = 0.0, tail_hi_t = 0.0;
  int evaluated = 0;
};

void accumulate(const Transform& tr, const std::function<double(const Abscissa&)>& f, double t, LevelSums& acc) {
  const Node n = tr.at(t);
  if (!n.valid) return;
  const double fx = f(n.a);
  const double term = fx * n.jacobian;
  ++acc.evaluated;
  if (!std::isfinite(term)) {
    std::ostringstream msg;
    msg << "integrand not finite at x = " << n.a.x;
    throw NonIntegrable(msg.str());
  }
  acc.sum += term;
  acc.abs_sum += std::abs(term);
  acc.peak = std::max(acc.peak, std::abs(term));
  if (t < 0 && -t >= acc.tail_lo_t) {
    acc.tail_lo_t = -t;
    acc.tail_lo = std::abs(term);
  } else if (t > 0 && t >= acc.tail_hi_t) {
    acc.tail_hi_t = t;
    acc.tail_hi = std::abs(term);
  }
}

}  // namespace

QuadratureResult integrate(const std::function<double(const Abscissa&)>& f, double lo, double hi,
                           const QuadratureOptions& opt) {
  if (!(lo < hi)) throw DomainError("integration interval is empty");
  const Transform tr(lo, hi);

  // Level k uses step 2^-k on [-kTMax, kTMax]: 2 * floor(kTMax * 2^k) + 1 nodes.
  int max_level = 0;
  while (2.0 * std::floor(kTMax * std::ldexp(1.0, max_level + 1)) + 1.0 <= opt.max_nodes) ++max_level;

  LevelSums acc;
  const int n0 = static_cast<int>(std::floor(kTMax));
  for (int j = -n0; j <= n0; ++j) accumulate(tr, f, static_cast<double>(j), acc);

  double h = 1.0;
  double prev = h * acc.sum;
  QuadratureResult res;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    const int nk = static_cast<int>(std::floor(kTMax / h));
    for (int j = -nk + ((nk % 2 == 0) ? 1 : 0); j <= nk; j += 2) {
      accumulate(tr, f, j * h, acc);
    }
    const double cur = h * acc.sum;
    const double l1 = h * acc.abs_sum;
    const double err = std::abs(cur - prev);
    res = {cur, err, acc.evaluated, l1, level};

    const double tail = std::max(acc.tail_lo, acc.tail_hi);
    if (acc.peak > 0.0 && tail > 1e-3 * acc.peak) {
      std::ostringstream msg;
      msg << "integrand does not decay at the ends of (" << lo << ", " << hi << "): tail/peak = " << tail / acc.peak;
      throw NonIntegrable(msg.str());
    }

    const double threshold = std::max({opt.rel_tol * std::abs(cur), opt.abs_tol, 1e-13 * l1});
    if (level >= 3 && err <= threshold) return res;
    prev = cur;
  }

  std::ostringstream msg;
  msg << "quadrature on (" << lo << ", " << hi << ") did not converge within " << res.nodes_used
      << " nodes: value " << res.value << ", level difference " << res.abs_error_estimate;
  throw NoConvergence(msg.str());
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opt) {
  // nodes that round onto an end carry no information for an x-only integrand
  return integrate([&](const Abscissa& a) { return a.x > lo && a.x < hi ? f(a.x) : 0.0; }, lo, hi, opt);
}

QuadratureResult inner_product(const ProblemParams& p, const std::function<double(double)>& f,
                               const std::function<double(double)>& g, const QuadratureOptions& opt) {
  const auto integrand = [&](const Abscissa& a) {
    const double lw = log_weight_rho(p, a.x, a.gaps);
    const double w = std::exp(lw);
    if (w == 0.0 || a.x <= p.interval().lo || a.x >= p.interval().hi) return 0.0;
    return (f(a.x) * g(a.x)) * w;
  };
  return integrate(integrand, p.interval().lo, p.interval().hi, opt);
}

QuadratureResult inner_product(const AssocFunction& f, const AssocFunction& g, const QuadratureOptions& opt) {
  const ProblemParams& p = f.params;
  const DoublePolynomial pf(f.phi), pg(g.phi);
  const double half_m = 0.5 * (f.m + g.m);
  const auto integrand = [&](const Abscissa& a) {
    const double lw = log_weight_rho(p, a.x, a.gaps);
    const double w = std::exp(lw);
    if (w == 0.0) return 0.0;
    const double sig = sigma_from_gaps(p, a.x, a.gaps);
    const double kap = half_m == 0.0 ? 1.0 : std::pow(sig, half_m);
    return (pf(a.x) * pg(a.x)) * (kap * w);
  };
  return integrate(integrand, p.interval().lo, p.interval().hi, opt);
}

double GramMatrix::max_relative_offdiagonal() const {
  double worst = 0.0;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) worst = std::max(worst, std::abs(values[i][j]) / std::sqrt(values[i][i] * values[j][j]));
  return worst;
}

std::string GramMatrix::to_csv() const {
  std::ostringstream out;
  out << "l\\k";
  for (int k = m; k <= l_max; ++k) out << ',' << k;
  out << '\n';
  char buf[32];
  for (int l = m; l <= l_max; ++l) {
    out << l;
    for (double v : values[static_cast<std::size_t>(l - m)]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

GramMatrix gram_matrix(const ProblemParams& p, int m, int l_max, const QuadratureOptions& opt) {
  if (m < 0 || l_max < m) throw IndexError("gram matrix needs 0 <= m <= l_max");
  p.require_index(l_max);

  std::vector<AssocFunction> fs;
  for (int l = m; l <= l_max; ++l) fs.push_back(make_assoc(p, l, m));

  const std::size_t n = fs.size();
  GramMatrix gm;
  gm.m = m;
  gm.l_max = l_max;
  gm.values.assign(n, std::vector<double>(n, 0.0));
  gm.error_estimates.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const QuadratureResult r = inner_product(fs[i], fs[j], opt);
      gm.values[i][j] = gm.values[j][i] = r.value;
      gm.error_estimates[i][j] = gm.error_estimates[j][i] = r.abs_error_estimate;
    }
  }
  return gm;
}

}  // namespace hyperorth
