#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hyperorth/polynomial.hpp"
#include "hyperorth/rational.hpp"

namespace hyperorth {

/// The six hypergeometric-type families, named by sigma(s):
/// 1, s, 1 - s^2, s^2 - 1, s^2, s^2 + 1.
enum class CaseId { One, S, OneMinusS2, S2MinusOne, S2, S2PlusOne };

inline constexpr std::array<CaseId, 6> kAllCases = {CaseId::One,        CaseId::S,  CaseId::OneMinusS2,
                                                    CaseId::S2MinusOne, CaseId::S2, CaseId::S2PlusOne};

/// Short command-line name: one, s, one-minus-s2, s2-minus-one, s2, s2-plus-one.
std::string_view case_name(CaseId c);
/// Human readable sigma(s), e.g. "1 - s^2".
std::string_view sigma_text(CaseId c);
/// Accepts case_name() spellings plus a few aliases; empty optional if unknown.
std::optional<CaseId> parse_case(std::string_view name);

/// sigma(s) = a s^2 + b s + c with exact integer coefficients.
struct SigmaCoeffs {
  int a, b, c;
};
SigmaCoeffs sigma_coeffs(CaseId c);

/// Open interval (lo, hi); infinite ends are +-infinity.
struct Interval {
  double lo;
  double hi;
  bool contains(double s) const { return s > lo && s < hi; }
  bool lo_finite() const;
  bool hi_finite() const;
};
Interval canonical_interval(CaseId c);

/// Index bound nu: infinite for sigma in {1, s, 1 - s^2}, otherwise (1 - alpha) / 2.
class Cutoff {
 public:
  static Cutoff infinite() { return Cutoff(); }
  static Cutoff finite(Rational nu) { return Cutoff(std::move(nu)); }

  bool is_infinite() const { return !nu_.has_value(); }
  const Rational& value() const;
  /// True iff the integer index l satisfies l < nu.
  bool admits(long l) const { return is_infinite() || Rational(l) < *nu_; }
  /// Number of admissible indices; nullopt when infinite.
  std::optional<int> count() const;
  std::string to_string() const;

 private:
  Cutoff() = default;
  explicit Cutoff(Rational nu) : nu_(std::move(nu)) {}
  std::optional<Rational> nu_;
};

/// A validated (family, alpha, beta) triple. Construct through validate_params().
class ProblemParams {
 public:
  CaseId case_id() const { return case_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  double alpha_d() const { return alpha_d_; }
  double beta_d() const { return beta_d_; }
  const Interval& interval() const { return interval_; }
  const Cutoff& cutoff() const { return cutoff_; }
  SigmaCoeffs sigma() const { return sigma_coeffs(case_); }

  /// sigma and tau as exact polynomials.
  Polynomial sigma_poly() const;
  Polynomial tau_poly() const;

  double sigma_at(double s) const;
  double dsigma_at(double s) const;
  double d2sigma() const { return 2.0 * sigma().a; }
  double tau_at(double s) const { return alpha_d_ * s + beta_d_; }

  /// Throws IndexAboveCutoff unless l < nu (and l >= 0).
  void require_index(long l) const;

  friend ProblemParams validate_params(CaseId, const Rational&, const Rational&);

 private:
  ProblemParams() = default;
  CaseId case_{CaseId::One};
  Rational alpha_, beta_;
  double alpha_d_{0}, beta_d_{0};
  Interval interval_{0, 0};
  Cutoff cutoff_ = Cutoff::infinite();
};

/// Checks the admissibility constraint of the family and returns the validated
/// parameters carrying the interval and cutoff. Throws ConstraintViolation naming
/// the violated inequality.
ProblemParams validate_params(CaseId c, const Rational& alpha, const Rational& beta);

/// lambda_l = -sigma''/2 l(l-1) - alpha l, exact.
Rational lambda(const ProblemParams& p, long l);

/// Weight rho(s) of the family. Throws DomainError if s is not inside (a, b).
double weight_rho(const ProblemParams& p, double s);

/// Distances of s to the interval ends, supplied separately so that weights with
/// endpoint singularities can be evaluated without cancellation. A gap to an
/// infinite end is ignored.
struct Gaps {
  double from_lo;
  double from_hi;
};

/// log rho(s) given s together with its endpoint gaps. Returns -inf where the
/// weight underflows (e.g. a gap of exactly zero at a vanishing end).
double log_weight_rho(const ProblemParams& p, double s, Gaps gaps);

/// sigma(s) evaluated from the endpoint gaps, accurate near finite ends.
double sigma_from_gaps(const ProblemParams& p, double s, Gaps gaps);

/// Local geometry at s: sigma and kappa = sqrt(sigma) with derivatives, tau.
struct LocalGeometry {
  double s;
  double sigma, dsigma, d2sigma;
  double kappa, dkappa, d2kappa;
  double tau, dtau;
};
/// Precondition: sigma(s) > 0.
LocalGeometry local_geometry(const ProblemParams& p, double s);

}  // namespace hyperorth
