#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperorth/assoc.hpp"
#include "hyperorth/quadrature.hpp"

namespace hyperorth {

/// Shortest text that round-trips the double ("%.17g"); "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

/// {"degree": n, "coeffs": ["p/q", ...]} in ascending powers.
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

/// {"case", "alpha", "beta", "l", "m", "phi": poly}. Generic functions carry l = -1.
nlohmann::json assoc_to_json(const AssocFunction& f);
AssocFunction assoc_from_json(const nlohmann::json& j);

/// {"m", "lmax", "gram": [[...]]}.
nlohmann::json gram_to_json(const GramMatrix& g);

/// V_m, W_m and Psi_{l,m} for several l on a uniform x grid.
struct PotentialGrid {
  ProblemParams params;
  int m;
  std::vector<long> ls;
  std::vector<double> x, V, W;
  std::vector<std::vector<double>> psi;  // psi[i] belongs to ls[i]

  /// Header "x,V_m,W_m,Psi_<l>_<m>,..."; one row per grid point.
  std::string to_csv() const;
  /// {"case","alpha","beta","l":[...],"m","sign","columns":[...],"rows":[[...]]}.
  nlohmann::json to_json() const;
};

/// n points from lo to hi inclusive (n = 1 gives the single point lo). Both ends
/// must lie strictly inside the x interval; every l needs m <= l < nu.
PotentialGrid potential_grid(const ProblemParams& p, int m, const std::vector<long>& ls, double lo, double hi, int n);

}  // namespace hyperorth
