#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dbent::cli {

enum ExitCode : int { Ok = 0, Failure = 1, Usage = 2 };

/// Parses `args` (without the program name), runs one subcommand and writes
/// its JSON result, or an {"error": {...}} record, to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace dbent::cli
