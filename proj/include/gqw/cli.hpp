#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gqw {

inline constexpr const char* kVersion = "gqw 0.1.0";

// Runs one subcommand. `args` excludes the program name. Returns the process
// exit code: 0 ok, 2 parse error, 3 precondition, 4 violation, 5 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqw
