#ifndef LPKIT_CLI_HPP
#define LPKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lpkit {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitSchema = 2,
  kExitPrecondition = 3,
  kExitEmptyInfimum = 4,
  kExitSearchExhausted = 5,
};

// args excludes the program name. Results go to `out` (or the --out file),
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpkit

#endif  // LPKIT_CLI_HPP
