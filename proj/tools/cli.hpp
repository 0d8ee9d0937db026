#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcordial::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;   // invalid labeling, Exhausted search, failed claim
inline constexpr int kRejected = 2;   // constructor precondition or obstruction
inline constexpr int kUndecided = 3;  // search ran out of budget
inline constexpr int kUsage = 64;     // malformed flags or input

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hcordial::cli
