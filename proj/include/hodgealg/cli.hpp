#pragma once

// Command-line front end. Exit codes: 0 ran (and --expect held), 1 --expect
// violated, 2 usage, IO or parse error.

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgealg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgealg
