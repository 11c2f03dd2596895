#ifndef WALLCROSS_CLI_HPP
#define WALLCROSS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wallcross {

// Full command-line entry point, testable in-process. Returns the process
// exit code: 0 success, 1 identity-check failure, 2 validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wallcross

#endif  // WALLCROSS_CLI_HPP
