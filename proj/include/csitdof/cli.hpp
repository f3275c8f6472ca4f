#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csitdof {

// Runs the command line `args` (without the program name). Data goes to
// `out` (or the --out file), explanations to `err`. Returns the exit code:
// 0 success, 1 invalid input, 2 unsupported case or failed precondition,
// 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csitdof
