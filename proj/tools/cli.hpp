#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dodgson::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;  // bad arguments or unparseable input
inline constexpr int kNotSquare = 3;
inline constexpr int kFallbackRequired = 4;
inline constexpr int kNoConvergence = 5;

/// Runs one command line (args excludes the program name) and returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dodgson::cli
