#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kDistinguished = 3,  // compare: P-equal but Theta-distinguished
};

/// Runs the thetalink command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
