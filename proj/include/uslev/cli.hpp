#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uslev {

/// Runs the command line `args` (without the program name). The JSON report
/// goes to `out`, diagnostics to `err`. Returns 0 on success, 1 when a
/// precondition could not be certified, 2 on invalid input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace uslev
