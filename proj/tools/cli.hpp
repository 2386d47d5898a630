#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdl::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kBudgetExceeded = 2 };

// Runs one subcommand. `args` excludes the program name. Results go to `out`
// unless --out names a file; diagnostics and the manifest (when no file is
// involved) go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdl::cli
