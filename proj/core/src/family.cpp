#include "hyperorth/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hyperorth/errors.hpp"

namespace hyperorth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, CaseId c, const char* inequality) {
  if (ok) return;
  std::ostringstream msg;
  msg << "constraint " << inequality << " violated for sigma(s) = " << sigma_text(c);
  throw ConstraintViolation(msg.str());
}

}  // namespace

std::string_view case_name(CaseId c) {
  switch (c) {
    case CaseId::One: return "one";
    case CaseId::S: return "s";
    case CaseId::OneMinusS2: return "one-minus-s2";
    case CaseId::S2MinusOne: return "s2-minus-one";
    case CaseId::S2: return "s2";
    case CaseId::S2PlusOne: return "s2-plus-one";
  }
  return "?";
}

std::string_view sigma_text(CaseId c) {
  switch (c) {
    case CaseId::One: return "1";
    case CaseId::S: return "s";
    case CaseId::OneMinusS2: return "1 - s^2";
    case CaseId::S2MinusOne: return "s^2 - 1";
    case CaseId::S2: return "s^2";
    case CaseId::S2PlusOne: return "s^2 + 1";
  }
  return "?";
}

std::optional<CaseId> parse_case(std::string_view name) {
  for (CaseId c : kAllCases)
    if (name == case_name(c)) return c;
  if (name == "1") return CaseId::One;
  if (name == "oneminuss2" || name == "1-s2") return CaseId::OneMinusS2;
  if (name == "s2minusone" || name == "s2-1") return CaseId::S2MinusOne;
  if (name == "s2plusone" || name == "s2+1") return CaseId::S2PlusOne;
  return std::nullopt;
}

SigmaCoeffs sigma_coeffs(CaseId c) {
  switch (c) {
    case CaseId::One: return {0, 0, 1};
    case CaseId::S: return {0, 1, 0};
    case CaseId::OneMinusS2: return {-1, 0, 1};
    case CaseId::S2MinusOne: return {1, 0, -1};
    case CaseId::S2: return {1, 0, 0};
    case CaseId::S2PlusOne: return {1, 0, 1};
  }
  return {0, 0, 1};
}

bool Interval::lo_finite() const { return std::isfinite(lo); }
bool Interval::hi_finite() const { return std::isfinite(hi); }

Interval canonical_interval(CaseId c) {
  switch (c) {
    case CaseId::One: return {-kInf, kInf};
    case CaseId::S: return {0.0, kInf};
    case CaseId::OneMinusS2: return {-1.0, 1.0};
    case CaseId::S2MinusOne: return {1.0, kInf};
    case CaseId::S2: return {0.0, kInf};
    case CaseId::S2PlusOne: return {-kInf, kInf};
  }
  return {-kInf, kInf};
}

const Rational& Cutoff::value() const {
  if (!nu_) throw std::logic_error("infinite cutoff has no finite value");
  return *nu_;
}

std::optional<int> Cutoff::count() const {
  if (!nu_) return std::nullopt;
  // Number of integers l >= 0 with l < nu, i.e. ceil(nu) for nu > 0.
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), nu_->get_num_mpz_t(), nu_->get_den_mpz_t());
  return static_cast<int>(c.get_si());
}

std::string Cutoff::to_string() const { return nu_ ? hyperorth::to_string(*nu_) : std::string("inf"); }

Polynomial ProblemParams::sigma_poly() const {
  auto [a, b, c] = sigma();
  return Polynomial({Rational(c), Rational(b), Rational(a)});
}

Polynomial ProblemParams::tau_poly() const { return Polynomial({beta_, alpha_}); }

double ProblemParams::sigma_at(double s) const {
  auto [a, b, c] = sigma();
  return (a * s + b) * s + c;
}

double ProblemParams::dsigma_at(double s) const {
  auto [a, b, c] = sigma();
  (void)c;
  return 2.0 * a * s + b;
}

void ProblemParams::require_index(long l) const {
  if (l < 0) throw IndexError("index l must be non-negative, got " + std::to_string(l));
  if (!cutoff_.admits(l)) {
    std::ostringstream msg;
    msg << "index l = " << l << " is not below the cutoff nu = (1 - alpha)/2 = " << cutoff_.to_string()
        << " for sigma(s) = " << sigma_text(case_) << "; the family has only " << *cutoff_.count()
        << " members";
    throw IndexAboveCutoff(msg.str());
  }
}

ProblemParams validate_params(CaseId c, const Rational& alpha, const Rational& beta) {
  switch (c) {
    case CaseId::One: require(alpha < 0, c, "alpha < 0"); break;
    case CaseId::S:
      require(alpha < 0, c, "alpha < 0");
      require(beta > 0, c, "beta > 0");
      break;
    case CaseId::OneMinusS2:
      require(alpha < beta, c, "alpha < beta");
      require(beta < -alpha, c, "beta < -alpha");
      break;
    case CaseId::S2MinusOne:
      require(-beta < alpha, c, "-beta < alpha");
      require(alpha < 0, c, "alpha < 0");
      break;
    case CaseId::S2:
      require(alpha < 0, c, "alpha < 0");
      require(beta > 0, c, "beta > 0");
      break;
    case CaseId::S2PlusOne: require(alpha < 0, c, "alpha < 0"); break;
  }

  ProblemParams p;
  p.case_ = c;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.alpha_d_ = alpha.get_d();
  p.beta_d_ = beta.get_d();
  p.interval_ = canonical_interval(c);
  if (c == CaseId::S2MinusOne || c == CaseId::S2 || c == CaseId::S2PlusOne) {
    p.cutoff_ = Cutoff::finite(Rational(1 - alpha) / 2);
  }
  return p;
}

Rational lambda(const ProblemParams& p, long l) {
  const Rational half_d2sigma = p.sigma().a;
  return -half_d2sigma * l * (l - 1) - p.alpha() * l;
}

double weight_rho(const ProblemParams& p, double s) {
  const Interval& iv = p.interval();
  if (!iv.contains(s)) {
    std::ostringstream msg;
    msg << "s = " << s << " outside (" << iv.lo << ", " << iv.hi << ")";
    throw DomainError(msg.str());
  }
  return std::exp(log_weight_rho(p, s, {s - iv.lo, iv.hi - s}));
}

double log_weight_rho(const ProblemParams& p, double s, Gaps gaps) {
  const double a = p.alpha_d();
  const double b = p.beta_d();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  switch (p.case_id()) {
    case CaseId::One: return 0.5 * a * s * s + b * s;
    case CaseId::S:
      if (!(gaps.from_lo > 0)) return kNegInf;
      return (b - 1.0) * std::log(gaps.from_lo) + a * s;
    case CaseId::OneMinusS2: {
      const double pa = -(a - b) / 2.0 - 1.0;
      const double pb = -(a + b) / 2.0 - 1.0;
      return pa * std::log(gaps.from_lo) + pb * std::log(gaps.from_hi);
    }
    case CaseId::S2MinusOne: {
      const double plus = (a - b) / 2.0 - 1.0;
      const double minus = (a + b) / 2.0 - 1.0;
      return plus * std::log(s + 1.0) + minus * std::log(gaps.from_lo);
    }
    case CaseId::S2:
      if (!(gaps.from_lo > 0)) return kNegInf;
      return (a - 2.0) * std::log(gaps.from_lo) - b / gaps.from_lo;
    case CaseId::S2PlusOne: {
      const double as = std::abs(s);
      const double log1ps2 = as > 1e8 ? 2.0 * std::log(as) + std::log1p(1.0 / (s * s)) : std::log1p(s * s);
      return (a / 2.0 - 1.0) * log1ps2 + b * std::atan(s);
    }
  }
  return kNegInf;
}

double sigma_from_gaps(const ProblemParams& p, double s, Gaps gaps) {
  switch (p.case_id()) {
    case CaseId::OneMinusS2: return gaps.from_lo * gaps.from_hi;
    case CaseId::S2MinusOne: return gaps.from_lo * (s + 1.0);
    default: return p.sigma_at(s);
  }
}

LocalGeometry local_geometry(const ProblemParams& p, double s) {
  LocalGeometry g{};
  g.s = s;
  g.sigma = p.sigma_at(s);
  g.dsigma = p.dsigma_at(s);
  g.d2sigma = p.d2sigma();
  g.kappa = std::sqrt(g.sigma);
  g.dkappa = g.dsigma / (2.0 * g.kappa);
  g.d2kappa = (2.0 * g.sigma * g.d2sigma - g.dsigma * g.dsigma) / (4.0 * g.sigma * g.kappa);
  g.tau = p.tau_at(s);
  g.dtau = p.alpha_d();
  return g;
}

}  // namespace hyperorth
