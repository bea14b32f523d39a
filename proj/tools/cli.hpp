#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsweep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line `args` (without the program name). Output files
/// default to `out` when no `-o` is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsweep::cli
