#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vkit {

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 verification failure, 2 usage or data error, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vkit
