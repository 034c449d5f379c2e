#pragma once

#include <ostream>

namespace pompeiu::harness {

/// Exit codes of the pompeiu tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitSpec = 2,
  kExitDisagreement = 3,
  kExitNotGelfand = 4,
  kExitQuadrature = 5,
};

/// Entry point behind the `pompeiu` binary; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pompeiu::harness
