#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricfs {

/// Runs one subcommand; `args` excludes the program name. Returns 0 when
/// every check passes, 1 when a mathematical check fails and 2 on input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricfs
