#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tburau {

// Runs the command line given argv-style arguments (program name excluded).
// Returns the process exit code: 0 success / verification passed,
// 1 verification mismatch or failed selftest, 2 input or usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tburau
