#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lackwalk::cli {

// Exit codes: 0 success, 1 validation or numerical failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `lackwalk` binary. `out` receives CSV when no --out
// path is given, and the verify report; `err` receives diagnostics.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace lackwalk::cli
