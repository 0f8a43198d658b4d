#pragma once

#include <ostream>

namespace difinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitResidual = 1;  // a verification returned a residual
inline constexpr int kExitUsage = 2;     // bad flags or unparsable expression
inline constexpr int kExitLimit = 3;     // a configured limit was exceeded

/// Runs one command line (argv[0] is the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace difinv::cli
