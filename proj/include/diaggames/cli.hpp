// cli.hpp -- the diaggames command line: play, table, oracle.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diaggames::cli {

enum ExitCode : int {
    kExpected = 0,    // the game went as the shipped strategy guarantees
    kUnexpected = 1,  // a shipped strategy lost: a bug
    kUsage = 2,
    kBudget = 3,      // an oracle refused an over-budget instance
};

/// Runs one command line. `args` excludes the program name. Prompts and
/// results go to `out`, diagnostics to `err`; manual play reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diaggames::cli
