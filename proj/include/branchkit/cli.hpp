#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace branchkit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kMismatch = 2,
  kScaleExceeded = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace branchkit::cli
