#pragma once

#include <iosfwd>

namespace hyperorth::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kConstraint = 2;  // parameter constraint or x outside the domain
inline constexpr int kIndex = 3;       // index error or cutoff
inline constexpr int kNoConvergence = 4;

/// Parses argv and runs one subcommand (poly, assoc, gram, potential, verify).
/// Results go to `out`, diagnostics and timings to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperorth::cli
