#ifndef WPC_CLI_HPP
#define WPC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wpc {

// Runs one CLI invocation; args exclude the program name.
// Exit status: 0 success, 1 domain error, 2 parse/usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace wpc

#endif
