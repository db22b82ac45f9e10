#ifndef EVCALC_CLI_HPP
#define EVCALC_CLI_HPP

#include <iosfwd>

namespace evcalc::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kMathError = 2,
  kConventionConflict = 3,
};

/// Runs the `evcalc` command line. JSON values, CSV and reports go to `out`;
/// diagnostics go to `err`. Values not given on the command line are read
/// from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace evcalc::cli

#endif  // EVCALC_CLI_HPP
