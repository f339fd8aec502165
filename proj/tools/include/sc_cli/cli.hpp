#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs one `sc` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sc::cli
