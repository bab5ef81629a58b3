#pragma once

#include <ostream>

namespace pavi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand: bij, paths, count, series, verify or
/// render. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pavi::cli
