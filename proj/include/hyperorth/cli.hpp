#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperorth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Runs `hyperorth <subcommand> [options]`; args excludes the program name.
/// Results go to the configured output file, or `out` when none is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperorth::cli
