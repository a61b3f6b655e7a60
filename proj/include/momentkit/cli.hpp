#ifndef MOMENTKIT_CLI_HPP
#define MOMENTKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace momentkit::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 2,
    domain_error = 3,
    oracle_mismatch = 4,
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out`; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace momentkit::cli

#endif
