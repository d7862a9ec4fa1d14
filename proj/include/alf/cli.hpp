#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alf::cli {

enum ExitCode : int { kOk = 0, kNotAlf = 1, kInputError = 2, kInternalError = 3 };

/// Runs one command; args exclude the program name. Pair files named "-" (or
/// omitted) are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace alf::cli
