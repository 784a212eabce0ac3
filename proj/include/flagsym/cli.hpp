#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagsym {

/// Runs one CLI invocation (args without the program name) and writes the
/// payload to out. Exit status: 0 success, 1 verification failure,
/// 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace flagsym
