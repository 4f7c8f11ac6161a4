#pragma once

#include <iosfwd>

namespace stable_info {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_config = 2, exit_numeric = 3 };

/// Entry point of the stable-info tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stable_info
