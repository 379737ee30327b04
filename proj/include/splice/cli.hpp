#ifndef SPLICE_CLI_HPP
#define SPLICE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace splice {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitHypothesis = 2,
    kExitParse = 3,
    kExitBudget = 4,
};

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splice

#endif
