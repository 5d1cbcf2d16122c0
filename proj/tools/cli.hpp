#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcg::cli {

// Runs one command line; returns 0 on success, 1 on unexpected check failure, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcg::cli
