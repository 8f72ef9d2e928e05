#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxagg::cli {

/// Runs one CLI invocation. Returns 0 on success, 2 on usage errors.
/// Records are written to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxagg::cli
