#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokgraph {

/// Runs the command line; args[0] is the program name. Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a computation error and
/// 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokgraph
