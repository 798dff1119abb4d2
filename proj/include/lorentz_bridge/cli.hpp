#ifndef LORENTZ_BRIDGE_CLI_HPP
#define LORENTZ_BRIDGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz_bridge {

/// Process exit codes. Stable contract.
enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_domain = 3,
};

/// Runs the command line (args[0] is the program name). Data goes to `out`,
/// diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_CLI_HPP
