#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptd::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one subcommand (verify | tabulate | identity | spectrum). `args`
// excludes the program name. Results go to `out` or to --output; diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptd::cli
