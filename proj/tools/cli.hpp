#ifndef EQUICERT_TOOLS_CLI_HPP
#define EQUICERT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace equicert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // identity does not hold, or the solver did not converge
  kUsage = 2,
  kNumeric = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to --output), usage text and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equicert::cli

#endif  // EQUICERT_TOOLS_CLI_HPP
