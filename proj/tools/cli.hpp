#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numfactor::cli {

/// Parses argv-style arguments (program name excluded), dispatches the
/// command, and writes data to `out` (or the --output file) and diagnostics
/// to `err`. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numfactor::cli
