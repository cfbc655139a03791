#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperorth {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.25" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hyperorth
