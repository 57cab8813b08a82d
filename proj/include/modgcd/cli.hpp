#ifndef MODGCD_CLI_HPP
#define MODGCD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modgcd {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,         ///< parse or usage error
    kExitDomain = 2,        ///< e.g. zero polynomial where forbidden
    kExitNotCoprime = 3,    ///< `coprime` answered "not coprime"
};

/// Runs one CLI invocation. args excludes the program name. A polynomial
/// argument "-" reads the next line from `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace modgcd

#endif  // MODGCD_CLI_HPP
