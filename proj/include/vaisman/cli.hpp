#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vaisman::cli {

/// Exit statuses of `run`.
inline constexpr int kVerified = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vaisman::cli
