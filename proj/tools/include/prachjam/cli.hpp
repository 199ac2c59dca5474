#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prachjam::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 1;
inline constexpr int kRuntimeError = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prachjam::cli
