#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tempiric {

/// Runs the command line `args` (args[0] is the program name).
/// Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
/// 2 usage or input error.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace tempiric
