#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altperm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// Runs the command line `args` (program name excluded). Data goes to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altperm
