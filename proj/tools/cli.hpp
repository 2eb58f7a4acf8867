#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boolprod::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapacity = 3,
  kConsistency = 4,
};

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolprod::cli
