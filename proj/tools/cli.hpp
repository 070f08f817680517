#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drgtight::cli {

/// Dispatch one invocation. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 validation/usage error, 2 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drgtight::cli
