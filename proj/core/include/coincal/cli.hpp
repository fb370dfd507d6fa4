#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coincal {

/// Command-line driver. `args` holds the arguments after the program name,
/// e.g. {"torus", "--matrix", "1 0; 0 2", "--m", "2"}. A report subcommand
/// always runs the chain validator before emitting.
///
/// Returns 0 on success, 1 on input or usage errors, 2 when an emitted
/// report fails its own consistency check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coincal
