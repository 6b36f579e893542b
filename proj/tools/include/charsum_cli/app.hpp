#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace charsum::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Parses args (without the program name), runs the subcommand and writes
/// the table to out (or --out). Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charsum::cli
