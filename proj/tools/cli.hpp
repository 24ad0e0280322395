#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nablalmo::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kRejected = 1,    // input is well formed but mathematically rejected
  kInputError = 2,  // bad flags, unreadable files, syntax errors
};

/// Runs one command; args exclude the program name. Output depends only on
/// the arguments, the files they name and NABLA_LMO_ORDER.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nablalmo::cli
