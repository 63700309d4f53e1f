#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gibbsdice::cli {

/// Bad flags or flag combinations; exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Environment variable naming the default output format.
inline constexpr const char* kFormatEnv = "GIBBSDICE_FORMAT";

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gibbsdice::cli
