#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mobiset::cli {

/// Process exit codes.
enum ExitCode : int {
  kTrue = 0,            // verdict true or result produced
  kFalse = 1,           // verdict false or no result
  kUsage = 2,           // bad flags, malformed input file, invalid parameters
  kBudget = 3,          // search budget exhausted; not a verdict
  kDimensionMismatch = 4,
};

/// Runs `mobiset <construct|verify|analyze> <kind> [flags]`; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mobiset::cli
