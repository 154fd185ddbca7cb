#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqm::cli {

/// Runs one tqm-disp invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a computation error (JSON on `err`), 2 on a
/// usage error, including argument values rejected by the library.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqm::cli
