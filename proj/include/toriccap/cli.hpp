#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toriccap {

// Exit codes: 0 success, 1 parse or domain error, 2 domain not strongly
// convex for a requested quantity, 3 oracle or golden mismatch.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitUnsupported = 2, kExitMismatch = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toriccap
