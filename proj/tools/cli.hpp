#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hubness::cli {

// Exit statuses of the hubness tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

// Runs one invocation. `args` excludes the program name. Reports go to the
// --out/--csv paths or, without --out, to `out`; failures print a single JSON
// line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hubness::cli
