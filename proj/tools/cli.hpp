#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cf::cli {

enum ExitStatus : int {
  kHolds = 0,     ///< command succeeded / the checked property holds
  kFalsified = 1, ///< the property was checked and found false
  kUsage = 2,     ///< usage or input error
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cf::cli
