#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bck::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // axiom violation, not commutative, failed audit
inline constexpr int kUsage = 2;     // bad flags, unreadable or unparsable input

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bck::cli
