#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperorth/family.hpp"

namespace hyperorth {

/// Outcome of one invariant check. `value` is the worst observed error in the
/// check's own metric (a mismatch count for exact checks), compared with
/// `value <= tolerance`.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

nlohmann::json to_json(const CheckResult& r);

/// Indices checked by default: l < min(nu, cap).
int index_limit(const ProblemParams& p, int cap);

/// Sample points spread over the bulk of the weight, strictly inside (a, b).
std::vector<double> sample_s_grid(const ProblemParams& p, int n);
/// The same for the x variable of the Schroedinger form.
std::vector<double> sample_x_grid(const ProblemParams& p, int n);

// Exact checks count mismatches; tolerance 0 is the natural setting.
CheckResult check_dual_generation(const ProblemParams& p, int limit, double tol = 0.0);
CheckResult check_ladder_closure(const ProblemParams& p, int limit, double tol = 0.0);
CheckResult check_build_from_top(const ProblemParams& p, int limit, double tol = 0.0);

/// Gram off-diagonals relative to sqrt(G_ll G_kk), m in {0, 1, 2}.
CheckResult check_orthogonality(const ProblemParams& p, int limit, double tol = 1e-8);
/// <A_m f, g> against <f, A_m^+ g> for eigenfunction pairs and mixed sums.
CheckResult check_adjointness(const ProblemParams& p, int limit, double tol = 1e-6);
/// ||Phi_{l,m+1}||^2 / ||Phi_{l,m}||^2 against lambda_l - lambda_m.
CheckResult check_norm_recursion(const ProblemParams& p, int limit, double tol = 1e-6);

/// Proportionality of Phi_l to the classical polynomial of the case.
CheckResult check_classical(const ProblemParams& p, int limit, double tol = 1e-9);
/// Imaginary part of the classical expression relative to its real part.
CheckResult check_classical_reality(const ProblemParams& p, int limit, double tol = 1e-10);

/// s-space factorization H_m - lambda_m = A^+A, H_{m+1} - lambda_m = AA^+ and the
/// intertwining relations, on eigenfunctions and on phi = s^3 + 1.
CheckResult check_factorization(const ProblemParams& p, int limit, double tol = 1e-8);
/// Riccati pair, analytic dW against differences, closed forms against the general formula.
CheckResult check_riccati(const ProblemParams& p, double tol = 1e-8);
/// (-d^2 + V_m - lambda_m) Psi = script-A^+ script-A Psi on Psi_{l,m}.
CheckResult check_susy_pairing(const ProblemParams& p, int limit, double tol = 1e-6);
/// W_m and V_m recovered from the ground state Psi_{m,m}.
CheckResult check_ground_state(const ProblemParams& p, double tol = 1e-6);
/// x-space ladder images and the top-down construction against psi_eval.
CheckResult check_x_ladder(const ProblemParams& p, int limit, double tol = 1e-6);

/// Finite-difference spectrum of V_0 in the default box against lambda_l for
/// every bound state below the threshold (at most `limit` states).
/// Relative error |delta| / max(|lambda|, 1).
CheckResult check_spectrum(const ProblemParams& p, int limit, double tol = 1e-3);

/// All of the above for one family; `tol_override` (if > 0) replaces every tolerance.
std::vector<CheckResult> run_verify(const ProblemParams& p, int l_max, double tol_override = -1.0);

}  // namespace hyperorth
