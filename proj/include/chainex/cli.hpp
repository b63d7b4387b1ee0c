#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainex::cli {

// Exit codes shared by the binary and in-process callers.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kPropertyFailed = 3;
inline constexpr int kResourceLimit = 4;

// Runs one command (args exclude the program name) writing results to `out`
// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainex::cli
