#ifndef HSP_CLI_HPP
#define HSP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hsp {

// Parses and executes one command line (arguments without the program name).
// Results go to `out`, diagnostics to `err`.  Returns the process exit code:
// 0 on success or when a checker's outcome matches the expectation, 1 when a
// check fails (or contradicts an explicit --expect), 2 on usage or input
// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsp

#endif
