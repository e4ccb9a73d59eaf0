#pragma once

// Command-line front end. Exit codes: 0 for computed results (including
// unknown verdicts and overflow), 2 for input errors, 1 for internal errors.

#include <ostream>
#include <string>
#include <vector>

namespace toric {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
