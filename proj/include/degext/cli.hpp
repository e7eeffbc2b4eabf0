#pragma once

#include <iosfwd>

namespace degext {

/// Runs one `degext` subcommand. JSON results (or a JSON error object) go to
/// `out` unless --out names a file. Returns the process exit code:
/// 0 success, 1 negative mathematical verdict, 2 usage or input error,
/// 3 numerical failure.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degext
