#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamekit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,        // success / verified
  kExitRefuted = 1,   // refuted / absent
  kExitUsage = 2,     // usage or parse error
  kExitBudget = 3,    // step budget exceeded
  kExitInternal = 4,  // internal consistency failure (a bug)
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamekit
