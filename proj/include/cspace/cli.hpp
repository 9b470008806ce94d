#pragma once

#include <iosfwd>

namespace cspace::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;

/// Runs the `cspace` command line. Options can also come from a key=value
/// config file (--config) or CSPACE_* environment variables; explicit flags
/// win over the file, which wins over the environment.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cspace::cli
