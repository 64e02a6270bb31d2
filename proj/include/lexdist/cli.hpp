#ifndef LEXDIST_CLI_HPP
#define LEXDIST_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lexdist::cli {

enum ExitCode {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lexdist::cli

#endif
