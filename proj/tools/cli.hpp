#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdd::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // verdict failed, unbalanced, self-check failure
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kBudget = 3,    // solver stopped on its node or time budget
};

inline constexpr unsigned long long kDefaultSeed = 20240229;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdd::cli
