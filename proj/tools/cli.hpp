#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trispec::cli {

/// Runs the command line (args excludes the program name). Returns the
/// process exit code: 0 success, 1 validation failure, 2 input error,
/// 3 size limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trispec::cli
