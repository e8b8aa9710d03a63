#pragma once

#include <iosfwd>

namespace betti {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitHypothesis = 4,
  kExitEmptyPool = 5,
};

/// Entry point of the command-line tool; subcommands betti, bounds, generate
/// and conjecture-scan.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betti
