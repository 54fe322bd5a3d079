#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logistic::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidArguments = 2,
  kNotConverged = 3,
};

/// Parses `args` (args[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace logistic::cli
