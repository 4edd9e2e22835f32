#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncnull::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  ///< non-member, nonzero, witness found, invalid certificate
  kUsage = 2,     ///< bad flags or input
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ncnull::cli
