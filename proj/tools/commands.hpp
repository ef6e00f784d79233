#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cblocks::cli {

/// Runs one CLI invocation (args exclude the program name) and writes to
/// the given streams.  Exit codes: 0 success, 1 verification failure,
/// 2 malformed input, 3 capability unavailable.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cblocks::cli
