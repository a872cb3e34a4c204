#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jordkit::cli {

/// Runs the command line (without the program name). Returns the exit status:
/// 0 on success, 1 on a domain error or a failed verify, CLI11's code on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordkit::cli
