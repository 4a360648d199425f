#pragma once

#include <iosfwd>

namespace hornlearn::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
/// Inequivalent formulas, a failed self-check or a broken invariant.
inline constexpr int kExitNegative = 1;
/// Bad arguments, unreadable or malformed input.
inline constexpr int kExitUsage = 2;

/// Runs the tool as if invoked with `argv`, writing to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hornlearn::cli
