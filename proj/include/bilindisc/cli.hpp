#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bilindisc {

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics to `err`. Returns 0 on success, 1 when a checked
// property fails, 2 on malformed input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bilindisc
