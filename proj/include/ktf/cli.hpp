#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ktf::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

// args excludes the program name. Results go to `out` (or --out FILE),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktf::cli
