#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wzsum::cli {

/// Runs the command line `args` (without the program name).
/// Returns 0 when every row passes, 1 when a row fails, 2 on usage, parse or
/// I/O errors (reported on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzsum::cli
