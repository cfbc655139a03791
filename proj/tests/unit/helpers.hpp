#pragma once

#include "hyperorth/family.hpp"
#include "hyperorth/rational.hpp"

namespace hyperorth::testing {

inline ProblemParams make(CaseId c, const char* alpha, const char* beta) {
  return validate_params(c, parse_rational(alpha), parse_rational(beta));
}

inline ProblemParams hermite_like() { return make(CaseId::One, "-2", "0"); }
inline ProblemParams laguerre_like() { return make(CaseId::S, "-1", "1"); }
inline ProblemParams morse() { return make(CaseId::S2, "-9", "2"); }

inline Rational Q(const char* text) { return parse_rational(text); }

}  // namespace hyperorth::testing
