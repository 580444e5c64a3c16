#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubetile {

/// Runs one CLI invocation; args excludes the program name. All regular
/// output goes to out, diagnostics to err.
///
/// Exit codes: 0 success / property holds, 1 property fails (invalid
/// tiling, no witness where one was asked for, not isomorphic), 2 usage or
/// parse error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cubetile
