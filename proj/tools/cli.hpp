#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace origami::cli {

/// Runs one command line. Exit codes: 0 success, 1 domain error, 2 usage
/// error. Everything that is not written to a file goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
