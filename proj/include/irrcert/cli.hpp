#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrcert {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitNotMet = 1,        // criterion not met, certificate invalid, reducible
  kExitInconclusive = 2,  // factoring or enumeration budget exhausted
  kExitInputError = 3,
};

/// Runs one command line (without the program name). Certificates, reports
/// and TSV tables go to out; human-readable diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrcert
