#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dinrep {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 verification failure, 2 input error, 3 guard exceeded.
// Diagnostics go to err; results go to out as one machine-readable JSON
// line per input file, followed by a short human summary.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dinrep
