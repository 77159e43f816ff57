#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magsq::cli {

// Dispatches one subcommand (args exclude the program name, natural order).
// Writes the JSON result to `out` (or to --output) and diagnostics to `err`.
// Returns 0 on success, 1 when an emitted report carries ok == false, and
// 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magsq::cli
