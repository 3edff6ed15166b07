#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patdual::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPreconditionError = 3,
  kComputationError = 4,  // singular systems, poles, other arithmetic failures
  kCrossCheckFailed = 5,
};

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patdual::cli
