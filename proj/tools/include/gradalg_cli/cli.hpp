#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradalg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kPreconditionFailed = 3,
};

/// Runs one command. `args` excludes the program name. The payload goes to
/// `out` for exit codes 0 and 1; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradalg::cli
