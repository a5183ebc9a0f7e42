#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sposet::cli {

// Runs one command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sposet::cli
