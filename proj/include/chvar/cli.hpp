#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace chvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Symbolic commands refuse matrices larger than this.
inline constexpr std::size_t kMaxSymbolicSize = 8;

/// Runs the command line; args excludes the program name. All regular output is
/// written to `out` in one piece at the end; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace chvar::cli
