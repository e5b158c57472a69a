#ifndef STANLEY_CLI_HPP
#define STANLEY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stanley::cli {

enum ExitCode : int {
    kTrue = 0,
    kFalse = 1,
    kInputError = 2,
    kResourceLimit = 3,
};

/// Runs one subcommand. args excludes the program name; `-` reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stanley::cli

#endif
