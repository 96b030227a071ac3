#ifndef NRWALK_CLI_APP_HPP
#define NRWALK_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nrw {

// Runs the nrwalk command line (arguments without the program name) against
// the given streams. Returns the process exit code: 0 on success, 1 when
// the requested checks ran but something they verify failed, 2 on usage,
// parse, or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nrw

#endif
