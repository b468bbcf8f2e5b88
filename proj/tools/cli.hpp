#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stackseries::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kNegativeAnswer = 1,  // well-formed query whose answer is no / unsortable / mismatch
  kUsageError = 2,
  kLimitError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stackseries::cli
