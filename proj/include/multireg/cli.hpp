#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multireg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kGenericityFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`. MULTIREG_FIELD, when set, overrides the
/// field named in the scheme file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multireg::cli
