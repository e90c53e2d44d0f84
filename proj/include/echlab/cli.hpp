#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace echlab {

/// Exit statuses of the command-line front end.
enum ExitStatus : int { exit_ok = 0, exit_verification_failed = 1, exit_input_error = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace echlab
