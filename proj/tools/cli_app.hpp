#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shifted::cli {

// Runs the command line given by args (without the program name), writing to
// the supplied streams. Returns the process exit code: 0 on success, 1 on a
// mathematical validation failure, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shifted::cli
