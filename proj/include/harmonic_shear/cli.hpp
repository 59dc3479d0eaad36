#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hshear {

/// Process exit codes; stable for scripts and CI.
enum ExitCode : int {
  kExitPass = 0,
  kExitCertificateFailed = 1,
  kExitUsage = 2,
  kExitEvaluation = 3,
  kExitIo = 4,
};

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hshear
