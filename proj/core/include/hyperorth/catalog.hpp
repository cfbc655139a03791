#pragma once

#include <string>
#include <vector>

#include "hyperorth/family.hpp"

namespace hyperorth {

/// Fixed parameter sets used by the verify command, the tests and the benchmarks.
/// The Schroedinger-side families are chosen so every bound state vanishes at
/// least like (distance)^{3/2} at a singular wall, which makes the Dirichlet
/// finite-difference spectrum the physical one.
struct NamedFamily {
  std::string name;
  std::string potential;
  ProblemParams params;
};

/// One family per sigma case, in kAllCases order.
const std::vector<NamedFamily>& standard_families();

const NamedFamily& standard_family(CaseId c);

}  // namespace hyperorth
