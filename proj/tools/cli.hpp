#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equisym::cli {

// Runs one command line (args exclude the program name). Exit codes: 0 success,
// 1 domain or usage error, 2 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equisym::cli
