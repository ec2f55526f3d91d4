#ifndef PINNACLE_CLI_HPP
#define PINNACLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pinnacle::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kResource = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pinnacle::cli

#endif // PINNACLE_CLI_HPP
