#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaoslab {

// Exit statuses of the chaoslab command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;          // parse or domain error
inline constexpr int kExitVerifyFailed = 2;   // a certificate clause failed

// Runs one chaoslab command. `args` excludes the program name. Artifacts go
// to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaoslab
