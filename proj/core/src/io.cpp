#include "hyperorth/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyperorth/errors.hpp"
#include "hyperorth/schroedinger.hpp"

namespace hyperorth {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

Polynomial poly_from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& s : j.at("coeffs")) c.push_back(parse_rational(s.get<std::string>()));
  Polynomial p(std::move(c));
  if (p.degree() != j.at("degree").get<int>()) throw Error("polynomial JSON: degree does not match coefficients");
  return p;
}

nlohmann::json assoc_to_json(const AssocFunction& f) {
  return {{"case", std::string(case_name(f.params.case_id()))},
          {"alpha", to_string(f.params.alpha())},
          {"beta", to_string(f.params.beta())},
          {"l", f.l},
          {"m", f.m},
          {"phi", poly_to_json(f.phi)}};
}

AssocFunction assoc_from_json(const nlohmann::json& j) {
  const auto c = parse_case(j.at("case").get<std::string>());
  if (!c) throw Error("unknown case in JSON: " + j.at("case").get<std::string>());
  const ProblemParams p = validate_params(*c,
                                          parse_rational(j.at("alpha").get<std::string>()),
                                          parse_rational(j.at("beta").get<std::string>()));
  return AssocFunction{p, j.at("l").get<long>(), j.at("m").get<int>(), poly_from_json(j.at("phi"))};
}

nlohmann::json gram_to_json(const GramMatrix& g) {
  return {{"m", g.m}, {"lmax", g.l_max}, {"gram", g.values}};
}

std::string PotentialGrid::to_csv() const {
  std::ostringstream out;
  out << "x,V_" << m << ",W_" << m;
  for (long l : ls) out << ",Psi_" << l << '_' << m;
  out << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << format_double(x[i]) << ',' << format_double(V[i]) << ',' << format_double(W[i]);
    for (const auto& col : psi) out << ',' << format_double(col[i]);
    out << '\n';
  }
  return out.str();
}

nlohmann::json PotentialGrid::to_json() const {
  nlohmann::json columns = {"x", "V_" + std::to_string(m), "W_" + std::to_string(m)};
  for (long l : ls) columns.push_back("Psi_" + std::to_string(l) + "_" + std::to_string(m));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> row = {x[i], V[i], W[i]};
    for (const auto& col : psi) row.push_back(col[i]);
    rows.push_back(row);
  }
  return {{"case", std::string(case_name(params.case_id()))},
          {"alpha", to_string(params.alpha())},
          {"beta", to_string(params.beta())},
          {"l", ls},
          {"m", m},
          {"sign", change_of_variable(params.case_id()).sign},
          {"columns", columns},
          {"rows", rows}};
}

PotentialGrid potential_grid(const ProblemParams& p, int m, const std::vector<long>& ls, double lo, double hi, int n) {
  if (n < 1) throw DomainError("grid needs n >= 1");
  if (n > 1 && !(hi > lo)) throw DomainError("grid needs lo < hi");
  const ChangeOfVariable cv = change_of_variable(p.case_id());
  for (double e : {lo, n > 1 ? hi : lo}) {
    if (!cv.x_interval.contains(e)) {
      std::ostringstream msg;
      msg << "grid end " << e << " is not strictly inside the x interval (" << cv.x_interval.lo << ", "
          << cv.x_interval.hi << ") for sigma(s) = " << sigma_text(p.case_id());
      throw DomainError(msg.str());
    }
  }

  PotentialGrid g{p, m, ls, {}, {}, {}, {}};
  std::vector<PsiFunction> fns;
  for (long l : ls) fns.push_back(make_psi(p, l, m));
  g.psi.resize(ls.size());
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    g.x.push_back(x);
    g.V.push_back(potential_V(p, m, x));
    g.W.push_back(superpotential_W(p, m, x));
    for (std::size_t k = 0; k < fns.size(); ++k) g.psi[k].push_back(fns[k].value(x));
  }
  return g;
}

}  // namespace hyperorth
