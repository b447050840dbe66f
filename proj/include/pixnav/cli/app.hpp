#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pixnav::cli {

// Exit codes of the command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // runtime error or failed replay check
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDataset = 3;
inline constexpr int kExitTransport = 5;

// Runs the pixnav command line on `args` (without the program name). Result
// records go to `out` as JSON lines, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pixnav::cli
