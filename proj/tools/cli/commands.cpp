#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperorth/catalog.hpp"
#include "hyperorth/checks.hpp"
#include "hyperorth/errors.hpp"
#include "hyperorth/generation.hpp"
#include "hyperorth/io.hpp"
#include "hyperorth/quadrature.hpp"
#include "hyperorth/schroedinger.hpp"

namespace hyperorth::cli {

namespace {

struct Config {
  std::string family;
  std::string case_name;
  std::string alpha;
  std::string beta;
  long l = 0;
  int m = 0;
  std::optional<int> lmax;
  std::optional<double> lo, hi;
  int n = 101;
  std::vector<long> ls;
  std::string format;
  double tol = -1.0;
};

ProblemParams resolve(const Config& c) {
  if (!c.family.empty()) {
    for (const auto& f : standard_families()) {
      if (f.name == c.family) return f.params;
    }
    throw ConstraintViolation("unknown family '" + c.family + "'");
  }
  if (c.case_name.empty() || c.alpha.empty() || c.beta.empty()) {
    throw ConstraintViolation("either --family or all of --case, --alpha, --beta are required");
  }
  const auto id = parse_case(c.case_name);
  if (!id) throw ConstraintViolation("unknown case '" + c.case_name + "'");
  return validate_params(*id, parse_rational(c.alpha), parse_rational(c.beta));
}

void add_family_options(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "named test family (see `verify --list`)");
  sub->add_option("--case", c.case_name, "one, s, one-minus-s2, s2-minus-one, s2, s2-plus-one");
  sub->add_option("--alpha", c.alpha, "rational, e.g. -9 or -17/2");
  sub->add_option("--beta", c.beta, "rational");
}

void add_format(CLI::App* sub, Config& c, const std::string& def) {
  sub->add_option("--format", c.format, "csv or json (default " + def + ")")->check(CLI::IsMember({"csv", "json"}));
}

std::string coeff_csv(const Polynomial& p) {
  std::ostringstream out;
  out << "power,coefficient\n";
  for (int k = 0; k <= p.degree(); ++k) out << k << ',' << to_string(p.coeff(k)) << '\n';
  return out.str();
}

nlohmann::json params_json(const ProblemParams& p) {
  return {{"case", std::string(case_name(p.case_id()))}, {"alpha", to_string(p.alpha())}, {"beta", to_string(p.beta())}};
}

int cmd_poly(const Config& c, std::ostream& out) {
  const ProblemParams p = resolve(c);
  const Polynomial phi = poly_coeffs(p, c.l);
  if (c.format == "csv") {
    out << coeff_csv(phi);
    return kOk;
  }
  nlohmann::json j = params_json(p);
  j.update(poly_to_json(phi));
  j["l"] = c.l;
  j["lambda"] = to_string(lambda(p, c.l));
  nlohmann::json zs = nlohmann::json::array();
  for (double z : zeros(p, c.l)) zs.push_back(format_double(z));
  j["zeros"] = zs;
  if (c.l >= 1 && p.cutoff().admits(c.l + 1)) {
    const ThreeTerm tt = three_term_coeffs(p, c.l);
    j["recurrence"] = {{"beta", to_string(tt.beta)}, {"gamma", to_string(tt.gamma)}};
  } else {
    j["recurrence"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_assoc(const Config& c, std::ostream& out) {
  const ProblemParams p = resolve(c);
  const AssocFunction f = make_assoc(p, c.l, c.m);
  if (c.format == "csv") out << coeff_csv(f.phi);
  else out << assoc_to_json(f).dump(2) << '\n';
  return kOk;
}

int cmd_gram(const Config& c, std::ostream& out) {
  const ProblemParams p = resolve(c);
  const int lmax = c.lmax.value_or(c.m + 3);
  const GramMatrix g = gram_matrix(p, c.m, lmax);
  if (c.format == "json") out << gram_to_json(g).dump(2) << '\n';
  else out << g.to_csv();
  return kOk;
}

int cmd_potential(const Config& c, std::ostream& out) {
  const ProblemParams p = resolve(c);
  double lo, hi;
  if (c.lo && c.hi) {
    lo = *c.lo;
    hi = *c.hi;
  } else {
    // default box, pulled 1% inside any finite end of the x interval
    const Box box = default_box(p);
    const Interval xi = change_of_variable(p.case_id()).x_interval;
    const double pad = 0.01 * (box.hi - box.lo);
    lo = c.lo.value_or(box.lo <= xi.lo ? xi.lo + pad : box.lo);
    hi = c.hi.value_or(box.hi >= xi.hi ? xi.hi - pad : box.hi);
  }
  std::vector<long> ls = c.ls;
  if (ls.empty()) ls.push_back(c.m);
  const PotentialGrid g = potential_grid(p, c.m, ls, lo, hi, c.n);
  if (c.format == "json") out << g.to_json().dump(2) << '\n';
  else out << g.to_csv();
  return kOk;
}

int cmd_verify(const Config& c, bool list, std::ostream& out, std::ostream& err) {
  if (list) {
    for (const auto& f : standard_families()) {
      out << std::left << std::setw(28) << f.name << case_name(f.params.case_id()) << " alpha=" << to_string(f.params.alpha())
          << " beta=" << to_string(f.params.beta()) << "  " << f.potential << '\n';
    }
    return kOk;
  }
  const ProblemParams p = resolve(c);
  const int lmax = c.lmax.value_or(index_limit(p, 8) - 1);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckResult> results = run_verify(p, lmax, c.tol);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool all = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    nlohmann::json j = to_json(r);
    j.erase("seconds");  // keep stdout reproducible; timings go to stderr
    checks.push_back(j);
  }
  nlohmann::json report = params_json(p);
  report["lmax"] = lmax;
  report["checks"] = checks;
  report["pass"] = all;

  if (c.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    out << "verify " << case_name(p.case_id()) << " alpha=" << to_string(p.alpha()) << " beta=" << to_string(p.beta())
        << " lmax=" << lmax << '\n';
    for (const auto& r : results) {
      out << "  " << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << r.name << std::right
          << std::setw(12) << std::setprecision(3) << std::scientific << r.value << " <= " << std::setw(9)
          << r.tolerance << std::defaultfloat << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    out << report.dump() << '\n';
  }
  for (const auto& r : results) err << "time " << r.name << ' ' << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  err << "time total " << std::fixed << std::setprecision(3) << seconds << " s\n" << std::defaultfloat;
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hypergeometric-type orthogonal polynomials and their Schroedinger partners", "hyperorth"};
  app.require_subcommand(1);
  Config c;
  bool list = false;

  auto* poly = app.add_subcommand("poly", "monic Phi_l: exact coefficients, zeros, three-term constants");
  add_family_options(poly, c);
  poly->add_option("--l", c.l, "degree")->required();
  add_format(poly, c, "json");

  auto* assoc = app.add_subcommand("assoc", "polynomial part of Phi_{l,m} = kappa^m Phi_l^(m)");
  add_family_options(assoc, c);
  assoc->add_option("--l", c.l)->required();
  assoc->add_option("--m", c.m)->required();
  add_format(assoc, c, "json");

  auto* gram = app.add_subcommand("gram", "Gram matrix <Phi_{l,m}, Phi_{k,m}> for m <= l, k <= lmax");
  add_family_options(gram, c);
  gram->add_option("--m", c.m);
  gram->add_option("--lmax", c.lmax);
  add_format(gram, c, "csv");

  auto* potential = app.add_subcommand("potential", "V_m, W_m and Psi_{l,m} on a uniform x grid");
  add_family_options(potential, c);
  potential->add_option("--m", c.m);
  potential->add_option("--ls", c.ls, "indices l of the Psi columns (default: m)")->delimiter(',');
  potential->add_option("--lo", c.lo);
  potential->add_option("--hi", c.hi);
  potential->add_option("--n", c.n)->check(CLI::PositiveNumber);
  add_format(potential, c, "csv");

  auto* verify = app.add_subcommand("verify", "run the invariant suite for one family");
  add_family_options(verify, c);
  verify->add_option("--lmax", c.lmax, "largest index checked (default min(nu, 8) - 1)");
  verify->add_option("--tol", c.tol, "replace every tolerance by this value");
  verify->add_flag("--list", list, "print the named test families");
  verify->add_option("--format", c.format, "text (table plus JSON line) or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (c.format.empty()) {
    c.format = (*poly || *assoc) ? "json" : (*verify ? "text" : "csv");
  }

  try {
    if (*poly) return cmd_poly(c, out);
    if (*assoc) return cmd_assoc(c, out);
    if (*gram) return cmd_gram(c, out);
    if (*potential) return cmd_potential(c, out);
    if (*verify) return cmd_verify(c, list, out, err);
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return kIndex;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const NonIntegrable& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace hyperorth::cli
