#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablegraph::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kBadGraph = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablegraph::cli
