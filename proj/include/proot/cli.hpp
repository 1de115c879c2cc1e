#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proot::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // a verification answered "no", or a selftest property failed
inline constexpr int kExitUsage = 2;  // malformed input or a violated precondition

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proot::cli
