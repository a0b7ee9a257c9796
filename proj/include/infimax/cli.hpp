#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infimax {

// Parses and runs one command line (without the program name). Writes results
// to `out` and diagnostics to `err`; returns the process exit code:
//   0 success, 2 malformed input, 3 cap exceeded, 4 internal invariant
//   violation, 1 selftest mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infimax
