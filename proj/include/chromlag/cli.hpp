#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromlag {

// Parse command-line arguments (without the program name) and run one
// subcommand, writing results to `out` and diagnostics to `err`.
// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chromlag
