#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szf {

/// Parses argv (including the program name) and runs one command, writing
/// results to `out` and a single-line diagnostic to `err` on failure.
/// Exit status: 0 success, 2 usage error, 3 malformed input document or zeta
/// string, 4 domain error from a library operation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szf
