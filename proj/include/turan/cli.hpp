#ifndef TURAN_CLI_HPP
#define TURAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success (and all verification links passing),
/// 1 at least one failed bound link, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli

#endif  // TURAN_CLI_HPP
