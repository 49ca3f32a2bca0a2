#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amply::cli {

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kInputError = 2 };

// Runs the command line `args` (without the program name). Standard input
// is `in` so that "-" can be exercised from tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace amply::cli
