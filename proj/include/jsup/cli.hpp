#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jsup::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Entry point shared by the jsup binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jsup::cli
