#ifndef WORDSPACE_CLI_HPP
#define WORDSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordspace {

/// Dispatches the analyze / generate / crossover / verify subcommands.
/// args is argv without the program name. Returns the process exit code:
/// 0 success (for verify: oracle matched), 1 failed verification, 2 errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordspace

#endif
