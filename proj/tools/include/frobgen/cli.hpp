// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with in-memory streams.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobgen::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMath = 2, kVerification = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobgen::cli
