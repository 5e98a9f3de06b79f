#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yule {

/// Full command-line entry point: parses argv-style arguments, writes
/// machine-readable output to `out` and diagnostics to `err`.
/// Returns the process exit code: 0 success (degenerate statistics are
/// still reports), 1 domain error, 2 usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace yule
