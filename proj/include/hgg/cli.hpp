#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgg::cli {

enum ExitCode : int { kOk = 0, kVerifiedFalse = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace hgg::cli
