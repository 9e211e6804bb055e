#pragma once

#include <iosfwd>

namespace jg {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitInternal = 3 };

/// Entry point of the `jg` command line tool. Writes results to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jg
