#include "hyperorth/catalog.hpp"

namespace hyperorth {

namespace {

NamedFamily make(std::string name, std::string potential, CaseId c, const char* alpha, const char* beta) {
  return {std::move(name), std::move(potential), validate_params(c, parse_rational(alpha), parse_rational(beta))};
}

}  // namespace

const std::vector<NamedFamily>& standard_families() {
  static const std::vector<NamedFamily> families = {
      make("hermite-like", "harmonic oscillator", CaseId::One, "-2", "0"),
      make("laguerre-like", "radial oscillator", CaseId::S, "-2", "5/2"),
      make("poschl-teller", "trigonometric Poschl-Teller", CaseId::OneMinusS2, "-5", "1"),
      make("generalized-poschl-teller", "hyperbolic generalized Poschl-Teller", CaseId::S2MinusOne, "-8", "12"),
      make("morse", "Morse", CaseId::S2, "-9", "2"),
      make("scarf", "hyperbolic Scarf", CaseId::S2PlusOne, "-7", "1"),
  };
  return families;
}

const NamedFamily& standard_family(CaseId c) {
  for (const auto& f : standard_families()) {
    if (f.params.case_id() == c) return f;
  }
  return standard_families().front();
}

}  // namespace hyperorth
