#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetkit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInvalidPoset = 1,
  kVerificationFailed = 2,
  kUsage = 3,
};

/// Runs one command line (without the program name). A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace posetkit::cli
