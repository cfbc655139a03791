#include "hyperorth/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hyperorth {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::derivative(int order) const {
  Polynomial p = *this;
  for (int i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Polynomial Polynomial::monic() const {
  const Rational lc = leading();
  return *this / lc;
}

double Polynomial::operator()(double s) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->get_d();
  return acc;
}

Rational Polynomial::evaluate(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator/(Polynomial a, const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  for (auto& x : a.coeffs_) x /= c;
  return a;
}

DoublePolynomial::DoublePolynomial(const Polynomial& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c_.push_back(q.get_d());
}

double DoublePolynomial::operator()(double s) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

void DoublePolynomial::evaluate(double s, double& v, double& d1, double& d2) const {
  v = d1 = d2 = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    d2 = d2 * s + 2.0 * d1;
    d1 = d1 * s + v;
    v = v * s + *it;
  }
}

}  // namespace hyperorth
