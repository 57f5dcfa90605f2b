#ifndef POLAR_CLI_HPP
#define POLAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polar {

// Runs one CLI invocation. Exit status: 0 success, 1 error, 2 negative
// mathematical verdict, 64 usage problems.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polar

#endif
