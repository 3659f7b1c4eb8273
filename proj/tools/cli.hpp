#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace truncmul::cli {

enum ExitCode : int {
  kOk = 0,
  kNothingFound = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one command line (args[0] is the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace truncmul::cli
