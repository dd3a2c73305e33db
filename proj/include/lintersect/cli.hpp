#ifndef LINTERSECT_CLI_HPP
#define LINTERSECT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lintersect::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,  // a property, certificate or bound check failed
  kInputError = 2,       // malformed input, bad parameters, caps exceeded
};

/// Runs one invocation. args excludes the program name. Reports go to out,
/// diagnostics to err. Reads LINTERSECT_MAX_N from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lintersect::cli

#endif  // LINTERSECT_CLI_HPP
