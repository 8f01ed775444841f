#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packdom::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitNegative = 2,  // infeasible, above budget, failed check, counterexample
  kExitTimeout = 3,
  kExitInternal = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packdom::cli
