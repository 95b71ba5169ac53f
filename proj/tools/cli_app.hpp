#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reflecto::cli {

// Runs one invocation given argv-style arguments (without the program name),
// writing results to `out` and diagnostics to `err`.  Returns the process
// exit code: 0 success / all checks pass, 1 check or comparison failure,
// 2 inconclusive result or insufficient budget, 3 usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace reflecto::cli
