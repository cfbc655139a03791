#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "hyperorth/rational.hpp"

namespace hyperorth {

/// Dense univariate polynomial in s with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of s^k. Trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// s^k.
  static Polynomial monomial(int k, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of s^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Polynomial derivative() const;
  Polynomial derivative(int order) const;
  /// Divides by the leading coefficient. Precondition: not the zero polynomial.
  Polynomial monic() const;

  /// Horner evaluation in double precision (coefficients converted once per call).
  double operator()(double s) const;
  /// Exact evaluation.
  Rational evaluate(const Rational& s) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(Polynomial a, const Rational& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Double-precision copy of the coefficients, for repeated fast evaluation.
class DoublePolynomial {
 public:
  DoublePolynomial() = default;
  explicit DoublePolynomial(const Polynomial& p);

  double operator()(double s) const;
  /// Value and first two derivatives in one Horner pass.
  void evaluate(double s, double& v, double& d1, double& d2) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const double> coeffs() const { return c_; }

 private:
  std::vector<double> c_;
};

}  // namespace hyperorth
