#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ydilog {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the yverify command line. args[0] is the program name. Returns the process exit status:
/// 0 when every check passed, 1 when a check or a solver failed, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ydilog
