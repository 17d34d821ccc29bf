#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resdim::cli {

// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,
  kInvalidCertificate = 1,
  kParseError = 2,
  kSizeLimit = 3,
  kInfeasible = 4,
};

// Runs one CLI invocation; args excludes the program name. All regular
// output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resdim::cli
